"""Exact arithmetic functions behind the covering-counting formulas.

All functions take positive integers and return exact Python integers
(arbitrary precision, so there is no overflow to guard against).  The
counting formulas routinely evaluate these functions at ratio arguments
like n/3 or n/12; by convention every function is 0 when the ratio is not
a positive integer.  Use ``at_ratio`` for that.
"""

from functools import lru_cache
from math import gcd, isqrt


def _check_pos(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"expected a positive integer, got {n!r}")


def divisors(n: int) -> list[int]:
    """Sorted list of the positive divisors of n."""
    _check_pos(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def divisor_sigma(j: int, n: int) -> int:
    """Sum of k^j over the divisors k of n, for j in {0, 1}."""
    if j not in (0, 1):
        raise ValueError(f"divisor_sigma supports j in {{0, 1}}, got {j}")
    _check_pos(n)
    return sum(k ** j for k in divisors(n))


@lru_cache(maxsize=None)
def sigma2(n: int) -> int:
    """Sum of sigma_1(k) over the divisors k of n."""
    _check_pos(n)
    return sum(divisor_sigma(1, k) for k in divisors(n))


@lru_cache(maxsize=None)
def omega(n: int) -> int:
    """Sum of k*sigma_1(k) over the divisors k of n.

    Counts the finite-index sublattices of Z^3 of index n.
    """
    _check_pos(n)
    return sum(k * divisor_sigma(1, k) for k in divisors(n))


def chi(n: int) -> int:
    """The quadratic character mod 3: +1, -1, 0 for n = 1, 2, 0 mod 3."""
    _check_pos(n)
    r = n % 3
    if r == 1:
        return 1
    if r == 2:
        return -1
    return 0


@lru_cache(maxsize=None)
def theta(n: int) -> int:
    """Number of pairs p > q >= 0 with p^2 - p*q + q^2 = n.

    The half-open domain p > q >= 0 is a fundamental domain for the six
    units of the Eisenstein lattice, so theta(n) also counts the index-n
    sublattices of Z^2 invariant under the order-3 rotation ell (see the
    lattice module).  The looser domain p > 0, q >= 0 would double count,
    e.g. both (1,0) and (1,1) represent n = 1.
    """
    _check_pos(n)
    count = 0
    p = 1
    while 3 * p * p <= 4 * n:
        disc = 4 * n - 3 * p * p
        s = isqrt(disc)
        if s * s == disc:
            for t in {p + s, p - s}:
                if t % 2 == 0 and 0 <= t // 2 < p:
                    count += 1
        p += 1
    return count


def theta_via_character(n: int) -> int:
    """theta(n) computed as the divisor sum of the character chi."""
    _check_pos(n)
    return sum(chi(k) for k in divisors(n))


def s_halves(n: int) -> int:
    """Number of pairs (H, nu): index-n sublattice H of Z^2, 2-torsion coset nu.

    Equals sigma_1(n) + 3*sigma_1(n/2) with the vanishing convention.
    """
    _check_pos(n)
    return divisor_sigma(1, n) + 3 * at_ratio(lambda m: divisor_sigma(1, m), n, 2)


def t_thirds(n: int) -> int:
    """Number of pairs (H, nu): ell-invariant index-n sublattice, ell-fixed coset.

    Equals theta(n) + 2*theta(n/3) with the vanishing convention.
    """
    _check_pos(n)
    return theta(n) + 2 * at_ratio(theta, n, 3)


def at_ratio(f, n: int, d: int) -> int:
    """Evaluate f at n/d, or 0 when d does not divide n."""
    _check_pos(n)
    _check_pos(d)
    if n % d != 0:
        return 0
    return f(n // d)


def coprime(a: int, b: int) -> bool:
    return gcd(a, b) == 1
