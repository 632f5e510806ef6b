import pytest

from covenum import formulas, oracle
from covenum.formulas import c_closed, s_closed
from covenum.oracle import CoveringType
from covenum.words import GroupId


def test_s_closed_examples():
    assert s_closed(GroupId.G3, CoveringType.Z3, 2) == 0
    assert s_closed(GroupId.G3, CoveringType.G3, 4) == 5
    assert s_closed(GroupId.G5, CoveringType.G5, 7) == 15
    assert [s_closed(GroupId.G3, CoveringType.G3, n)
            for n in range(1, 5)] == [1, 1, 3, 5]
    assert [s_closed(GroupId.G3, CoveringType.Z3, n)
            for n in (3, 6, 12)] == [1, 7, 35]


def test_c_closed_examples():
    assert c_closed(GroupId.G3, CoveringType.G3, 3) == 3
    assert c_closed(GroupId.G3, CoveringType.G3, 9) == 3
    assert c_closed(GroupId.G3, CoveringType.Z3, 9) == 7
    assert c_closed(GroupId.G5, CoveringType.G2, 12) == 6
    assert c_closed(GroupId.G5, CoveringType.Z3, 18) == 5


def test_g5_n6_profile():
    s = {t: s_closed(GroupId.G5, t, 6) for t in oracle.ADMISSIBLE[GroupId.G5]}
    c = {t: c_closed(GroupId.G5, t, 6) for t in oracle.ADMISSIBLE[GroupId.G5]}
    assert s == {CoveringType.G5: 0, CoveringType.G3: 3,
                 CoveringType.G2: 6, CoveringType.Z3: 1}
    assert c == {CoveringType.G5: 0, CoveringType.G3: 2,
                 CoveringType.G2: 2, CoveringType.Z3: 1}
    assert sum(s.values()) == 10 and sum(c.values()) == 5


def test_inadmissible_rejected():
    for fn in (s_closed, c_closed):
        with pytest.raises(ValueError):
            fn(GroupId.G3, CoveringType.G2, 5)
        with pytest.raises(ValueError):
            fn(GroupId.G3, CoveringType.G5, 5)
        with pytest.raises(ValueError):
            fn(GroupId.G5, CoveringType.G5, 0)


def test_index_one_counts():
    for g in GroupId:
        for t in oracle.ADMISSIBLE[g]:
            want = 1 if t.value == g.value else 0
            assert s_closed(g, t, 1) == want
            assert c_closed(g, t, 1) == want


def test_class_counts_integral_and_bounded():
    """The fractional prefactors always divide exactly, and classes never
    outnumber subgroups."""
    for g in GroupId:
        for t in oracle.ADMISSIBLE[g]:
            for n in range(1, 1001):
                c = c_closed(g, t, n)  # would raise if non-integral
                s = s_closed(g, t, n)
                assert 0 <= c <= s
    for n in range(1, 1001):
        total_s = sum(s_closed(GroupId.G5, t, n)
                      for t in oracle.ADMISSIBLE[GroupId.G5])
        total_c = sum(c_closed(GroupId.G5, t, n)
                      for t in oracle.ADMISSIBLE[GroupId.G5])
        assert total_s >= total_c


def test_matches_oracle_small():
    for g in GroupId:
        for n in range(1, 17):
            sc = oracle.subgroup_counts(g, n)
            cc = oracle.conjugacy_class_counts(g, n)
            for t in oracle.ADMISSIBLE[g]:
                assert sc[t] == s_closed(g, t, n)
                assert cc[t] == c_closed(g, t, n)


def test_exact_div_guard():
    with pytest.raises(ArithmeticError):
        formulas._exact_div(7, 3)
