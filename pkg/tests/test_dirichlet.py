import random
from fractions import Fraction

import pytest

from covenum import arith, dirichlet
from covenum.dirichlet import (DirichletExpr, ParseError, appendix_entry,
                               compare, expand, parse)
from covenum.formulas import c_closed, s_closed
from covenum.oracle import CoveringType
from covenum.words import GroupId


def test_atom_expansions():
    N = 50
    assert all(expand(DirichletExpr.zeta(0), N)[n] == 1
               for n in range(1, N + 1))
    assert all(expand(DirichletExpr.zeta(1), N)[n] == n
               for n in range(1, N + 1))
    assert all(expand(DirichletExpr.zeta(2), N)[n] == n * n
               for n in range(1, N + 1))
    assert all(expand(DirichletExpr.theta_l(0), N)[n] == arith.chi(n)
               for n in range(1, N + 1))


def test_zeta_times_theta_is_theta_fn():
    e = DirichletExpr.zeta(0) * DirichletExpr.theta_l(0)
    s = expand(e, 200)
    for n in range(1, 201):
        assert s[n] == arith.theta(n)


def test_dilated_omega():
    e = (DirichletExpr.dilate(3) * DirichletExpr.zeta(0)
         * DirichletExpr.zeta(1) * DirichletExpr.zeta(2))
    s = expand(e, 200)
    for n in range(1, 201):
        assert s[n] == arith.at_ratio(arith.omega, n, 3)


def test_dilation_law():
    base = DirichletExpr.zeta(0) * DirichletExpr.zeta(1)
    ref = expand(base, 216)
    for m in (2, 3, 6, 12, 18):
        s = expand(DirichletExpr.dilate(m) * base, 216)
        for n in range(1, 217):
            want = ref[n // m] if n % m == 0 else 0
            assert s[n] == want


def test_convolution_assoc_comm():
    rng = random.Random(161803)
    atoms = [DirichletExpr.zeta(0), DirichletExpr.zeta(1),
             DirichletExpr.theta_l(0), DirichletExpr.theta_l(1),
             DirichletExpr.dilate(2), DirichletExpr.dilate(3),
             DirichletExpr.constant(Fraction(1, 3))]
    for _ in range(25):
        a, b, c = (rng.choice(atoms) for _ in range(3))
        lhs = expand((a * b) * c, 100)
        rhs = expand(a * (b * c), 100)
        assert lhs == rhs
        assert expand(a * b, 100) == expand(b * a, 100)


def test_coeffseries_bounds():
    s = expand(DirichletExpr.zeta(0), 10)
    with pytest.raises(IndexError):
        s[0]
    with pytest.raises(IndexError):
        s[11]


def test_parse_roundtrip():
    for text in dirichlet.APPENDIX_TABLE.values():
        parse(text)  # must not raise
    e = parse("(1-3^-s)*(1+2*3^-s)*zeta(s)^2*theta(s)")
    assert expand(e, 60) == expand(
        appendix_entry(GroupId.G3, CoveringType.G3, "c"), 60)
    assert expand(parse("1/6 * zeta(s-1)"), 12)[6] == Fraction(1)
    assert expand(parse("-zeta(s) + 2*zeta(s)"), 5) == \
        expand(parse("zeta(s)"), 5)


def test_parse_errors_report_position():
    for text in ("zeta(s", "zeta(s)*", "2^", "zeta(s)^-s", "1/0",
                 "theta(t)", "zeta(s) @", "(zeta(s)"):
        with pytest.raises(ParseError) as err:
            parse(text)
        assert "position" in str(err.value)
    with pytest.raises(ParseError):
        # dilation base must be a literal integer
        parse("(1+1)^-s")


def test_appendix_entry_absent_cell():
    with pytest.raises(KeyError):
        appendix_entry(GroupId.G3, CoveringType.G2, "s")


def test_compare_examples():
    r = compare(appendix_entry(GroupId.G3, CoveringType.Z3, "s"),
                lambda n: s_closed(GroupId.G3, CoveringType.Z3, n), 200)
    assert r.agree
    r = compare(appendix_entry(GroupId.G3, CoveringType.G3, "c"),
                lambda n: c_closed(GroupId.G3, CoveringType.G3, n), 200)
    assert r.agree
    r = compare(appendix_entry(GroupId.G3, CoveringType.G3, "s"),
                lambda n: s_closed(GroupId.G3, CoveringType.G3, n), 200)
    assert not r.agree
    assert r.first_mismatch == 2
    assert r.series_value == 2 and r.target_value == 1
    assert "n=2" in str(r)


def test_errata_report():
    report = dirichlet.errata_report(200)
    assert len(report) == 12
    verdicts = {e["cell"]: e for e in report}
    mismatched = {c for c, e in verdicts.items() if not e["agrees"]}
    assert mismatched == {"s:g3:g3", "c:g2:g5", "s:g3:g5", "s:g5:g5"}
    for cell in mismatched:
        e = verdicts[cell]
        assert e["anticipated_mismatch"]
        assert e["corrected_agrees"]
        assert e["first_mismatch"] in (2, 3, 4)
    for cell, e in verdicts.items():
        if cell not in mismatched:
            assert e["agrees"] and not e["anticipated_mismatch"]
