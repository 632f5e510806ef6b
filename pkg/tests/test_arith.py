import pytest

from covenum import arith


def test_divisors():
    assert arith.divisors(1) == [1]
    assert arith.divisors(12) == [1, 2, 3, 4, 6, 12]
    assert arith.divisors(49) == [1, 7, 49]


def test_divisor_sigma():
    assert arith.divisor_sigma(1, 1) == 1
    assert arith.divisor_sigma(1, 6) == 12
    assert arith.divisor_sigma(0, 12) == 6
    with pytest.raises(ValueError):
        arith.divisor_sigma(2, 5)


def test_sigma2():
    assert arith.sigma2(1) == 1
    assert arith.sigma2(4) == 11
    assert arith.sigma2(12) == 55


def test_omega():
    assert arith.omega(1) == 1
    assert arith.omega(2) == 7
    assert arith.omega(6) == 91


def test_chi():
    assert arith.chi(1) == 1
    assert arith.chi(5) == -1
    assert arith.chi(6) == 0
    assert [arith.chi(n) for n in range(1, 7)] == [1, -1, 0, 1, -1, 0]


def test_theta_small():
    assert arith.theta(1) == 1
    assert arith.theta(2) == 0
    assert arith.theta(7) == 2
    assert [arith.theta(n) for n in range(1, 13)] == \
        [1, 0, 1, 1, 0, 0, 2, 0, 1, 0, 0, 1]


def test_theta_via_character():
    assert arith.theta_via_character(3) == 1
    assert arith.theta_via_character(7) == 2
    assert arith.theta_via_character(12) == 1


def test_theta_equals_character_sum():
    for n in range(1, 10001):
        assert arith.theta(n) == arith.theta_via_character(n)


def test_theta_multiplicative_on_coprime():
    for m in range(1, 60):
        for n in range(1, 60):
            if arith.coprime(m, n):
                assert arith.theta(m * n) == arith.theta(m) * arith.theta(n)


def test_omega_against_double_loop():
    for n in range(1, 400):
        direct = sum(k * sum(d for d in arith.divisors(k))
                     for k in arith.divisors(n))
        assert arith.omega(n) == direct


def test_s_halves():
    assert arith.s_halves(1) == 1
    assert arith.s_halves(2) == 6
    assert arith.s_halves(4) == 16


def test_t_thirds():
    assert arith.t_thirds(1) == 1
    assert arith.t_thirds(3) == 3
    assert arith.t_thirds(7) == 2


def test_at_ratio_vanishing():
    assert arith.at_ratio(arith.omega, 2, 3) == 0
    assert arith.at_ratio(arith.omega, 6, 3) == arith.omega(2)
    assert arith.at_ratio(arith.theta, 35, 18) == 0


@pytest.mark.parametrize("fn", [
    arith.divisors, arith.sigma2, arith.omega, arith.chi, arith.theta,
    arith.theta_via_character, arith.s_halves, arith.t_thirds])
def test_rejects_nonpositive(fn):
    for bad in (0, -1, 2.5):
        with pytest.raises(ValueError):
            fn(bad)
