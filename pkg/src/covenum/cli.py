"""Command-line front door.

Subcommands: ``table`` (closed-form counting sequences), ``verify``
(cross-check suites, JSON report), ``oracle`` (brute-force triples and
conjugacy classes), ``series`` (Dirichlet coefficient expansion and
comparison).  Per-n work can fan out to a process pool; COVERS_THREADS
sets the worker count (default: available cores).  Output is
byte-deterministic for fixed arguments regardless of parallelism.
"""

import argparse
import json
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import arith, dirichlet, formulas, lattice, oracle, words
from .oracle import CoveringType
from .words import GroupId

GROUPS = {"g3": GroupId.G3, "g5": GroupId.G5}
TYPES = {"z3": CoveringType.Z3, "g2": CoveringType.G2,
         "g3": CoveringType.G3, "g5": CoveringType.G5}

SCHEMA_VERSION = 1


def worker_count() -> int:
    env = os.environ.get("COVERS_THREADS")
    if env is not None:
        try:
            w = int(env)
        except ValueError:
            w = 0
        if w < 1:
            raise ValueError(f"COVERS_THREADS must be a positive integer, "
                             f"got {env!r}")
        return w
    return os.cpu_count() or 1


def _pmap(fn, items):
    """Map preserving order; fans out to processes when configured."""
    items = list(items)
    w = worker_count()
    if w == 1 or len(items) < 4:
        return [fn(it) for it in items]
    with ProcessPoolExecutor(max_workers=w) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // w)))


def _fmt_value(v):
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else str(v)
    return v


def emit_rows(rows, fmt, out):
    """rows: iterable of (n, value)."""
    if fmt == "csv":
        out.write("n,value\n")
        for n, v in rows:
            out.write(f"{n},{_fmt_value(v)}\n")
    elif fmt == "bfile":
        for n, v in rows:
            out.write(f"{n} {_fmt_value(v)}\n")
    else:
        out.write(json.dumps([{"n": n, "value": _fmt_value(v)}
                              for n, v in rows]) + "\n")


# top-level so the process pool can pickle them
def _formula_value(args):
    gv, kind, tv, n = args
    fn = formulas.s_closed if kind == "s" else formulas.c_closed
    return fn(GROUPS[gv], TYPES[tv], n)


def _oracle_vs_formula(args):
    """Smallest-n mismatch info for one (group, n), or None."""
    gv, n = args
    group = GROUPS[gv]
    sc = oracle.subgroup_counts(group, n)
    cc = oracle.conjugacy_class_counts(group, n)
    for ctype in oracle.ADMISSIBLE[group]:
        if sc[ctype] != formulas.s_closed(group, ctype, n):
            return {"n": n, "kind": "s", "sub": ctype.value,
                    "oracle": sc[ctype],
                    "formula": formulas.s_closed(group, ctype, n)}
        if cc[ctype] != formulas.c_closed(group, ctype, n):
            return {"n": n, "kind": "c", "sub": ctype.value,
                    "oracle": cc[ctype],
                    "formula": formulas.c_closed(group, ctype, n)}
    return None


def cmd_table(args, out) -> int:
    group, ctype = GROUPS[args.group], TYPES[args.sub]
    if ctype not in oracle.ADMISSIBLE[group]:
        raise ValueError(f"subgroup type {args.sub} does not occur in "
                         f"coverings of {args.group}")
    if args.nmax < 1:
        raise ValueError("--nmax must be >= 1")
    values = _pmap(_formula_value,
                   [(args.group, args.kind, args.sub, n)
                    for n in range(1, args.nmax + 1)])
    emit_rows(enumerate(values, start=1), args.format, out)
    return 0


def _check(name, bound, passed, **extra):
    rec = {"name": name, "bound": bound,
           "verdict": "pass" if passed else "fail"}
    rec.update(extra)
    return rec


def suite_formulas(nmax):
    checks = []
    for gv in GROUPS:
        results = _pmap(_oracle_vs_formula,
                        [(gv, n) for n in range(1, nmax + 1)])
        bad = next((r for r in results if r is not None), None)
        checks.append(_check(f"oracle-vs-closed-forms:{gv}", nmax,
                             bad is None,
                             **({"counterexample": bad} if bad else {})))
    return checks


def suite_lattice(nmax):
    checks = []
    n2 = nmax
    ok = next((n for n in range(1, n2 + 1)
               if len(lattice.sublattices2(n)) != arith.divisor_sigma(1, n)),
              None)
    checks.append(_check("sublattice2-count-is-sigma1", n2, ok is None,
                         **({"counterexample": {"n": ok}} if ok else {})))
    n3 = min(nmax, 60)
    ok = next((n for n in range(1, n3 + 1)
               if len(lattice.sublattices3(n)) != arith.omega(n)), None)
    checks.append(_check("sublattice3-count-is-omega", n3, ok is None,
                         **({"counterexample": {"n": ok}} if ok else {})))
    ok = next((n for n in range(1, n2 + 1)
               if not (len(lattice.ell_invariant_sublattices(n))
                       == arith.theta(n) == arith.theta_via_character(n))),
              None)
    checks.append(_check("ell-invariant-count-is-theta", n2, ok is None,
                         **({"counterexample": {"n": ok}} if ok else {})))
    nS = min(nmax, 300)
    ok = next((n for n in range(1, nS + 1)
               if sum(lattice.two_torsion_cosets(H)
                      for H in lattice.sublattices2(n)) != arith.s_halves(n)),
              None)
    checks.append(_check("two-torsion-sum-is-S", nS, ok is None,
                         **({"counterexample": {"n": ok}} if ok else {})))
    ok = next((n for n in range(1, n2 + 1)
               if sum(lattice.ell_fixed_cosets(H)
                      for H in lattice.ell_invariant_sublattices(n))
               != arith.t_thirds(n)), None)
    checks.append(_check("ell-fixed-sum-is-T", n2, ok is None,
                         **({"counterexample": {"n": ok}} if ok else {})))
    nscan = min(nmax, 100)
    bad = None
    for n in range(1, nscan + 1):
        for H in lattice.sublattices2(n):
            if lattice.two_torsion_cosets(H) != \
                    lattice.two_torsion_cosets_scan(H):
                bad = {"n": n, "H": [H.a, H.b, H.mu], "what": "two-torsion"}
                break
            if lattice.is_ell_invariant(H) and \
                    lattice.ell_fixed_cosets(H) != \
                    lattice.ell_fixed_cosets_scan(H):
                bad = {"n": n, "H": [H.a, H.b, H.mu], "what": "ell-fixed"}
                break
        if bad:
            break
    checks.append(_check("determinant-vs-scan-coset-counts", nscan,
                         bad is None,
                         **({"counterexample": bad} if bad else {})))
    return checks


def suite_words(nmax):
    del nmax  # bounds here are fixed counts, not index bounds
    checks = []
    rels_ok = True
    for group in GroupId:
        x, y, z = words.generators(group)
        comm = words.mul(words.mul(x, y), words.mul(words.inv(x),
                                                    words.inv(y)))
        rels_ok &= comm == words.identity(group)
        if group is GroupId.G3:
            rels_ok &= words.conj(x, z) == y
            rels_ok &= words.conj(y, z) == words.inv(words.mul(x, y))
        else:
            rels_ok &= words.conj(x, z) == words.mul(x, y)
            rels_ok &= words.conj(y, z) == words.inv(x)
    checks.append(_check("defining-relations", 1, rels_ok))

    m = words.M_G5
    ell = words.L_G3
    mat_ok = (words._mat_mul(m, m) == ell
              and words._mat_mul(ell, words._mat_mul(ell, ell))
              == words.IDENTITY_MAT
              and words._mat_mul(m, ell) == ((-1, 0), (0, -1))
              and words.twist(GroupId.G5, 6) == words.IDENTITY_MAT)
    checks.append(_check("twist-matrix-identities", 1, mat_ok))

    rng = random.Random(5771)
    trials = 10000
    assoc_ok = True
    phi_ok = True
    inv_ok = True
    for group in GroupId:
        for _ in range(trials):
            w1, w2, w3 = (words.word(group, *(rng.randint(-50, 50)
                                              for _ in range(3)))
                          for _ in range(3))
            if words.mul(words.mul(w1, w2), w3) != \
                    words.mul(w1, words.mul(w2, w3)):
                assoc_ok = False
            if words.phi(words.mul(w1, w2)) != words.phi(w1) + words.phi(w2):
                phi_ok = False
            if words.inv(words.inv(w1)) != w1 or \
                    words.mul(w1, words.inv(w1)) != words.identity(group):
                inv_ok = False
    checks.append(_check("associativity-random", trials, assoc_ok))
    checks.append(_check("phi-additivity-random", trials, phi_ok))
    checks.append(_check("inverse-laws-random", trials, inv_ok))
    return checks


def suite_dirichlet(nmax):
    checks = []
    errata = []
    for entry in dirichlet.errata_report(nmax):
        if entry["agrees"]:
            passed = not entry["anticipated_mismatch"]
            verdict_extra = {}
        else:
            passed = (entry["anticipated_mismatch"]
                      and entry.get("corrected_agrees", False))
            verdict_extra = {k: entry[k] for k in
                             ("first_mismatch", "table_value",
                              "theorem_value", "corrected_expression",
                              "corrected_agrees") if k in entry}
            errata.append(entry)
        name = ("appendix-cell:" + entry["cell"]
                + ("" if entry["agrees"] else ":expected-mismatch"
                   if entry["anticipated_mismatch"] else ":unexpected"))
        checks.append(_check(name, nmax, passed, **verdict_extra))
    return checks, errata


SUITES = {"formulas": suite_formulas, "lattice": suite_lattice,
          "words": suite_words}


def cmd_verify(args, out) -> int:
    if args.nmax < 1:
        raise ValueError("--nmax must be >= 1")
    names = (["formulas", "lattice", "words", "dirichlet"]
             if args.suite == "all" else [args.suite])
    report = {"schema_version": SCHEMA_VERSION, "nmax": args.nmax,
              "suites": {}}
    errata = None
    for name in names:
        if name == "dirichlet":
            checks, errata = suite_dirichlet(max(args.nmax, 1))
        else:
            checks = SUITES[name](args.nmax)
        report["suites"][name] = checks
    if errata is not None:
        report["errata"] = errata
    report["passed"] = all(c["verdict"] == "pass"
                           for checks in report["suites"].values()
                           for c in checks)
    out.write(json.dumps(report, indent=2) + "\n")
    return 0 if report["passed"] else 1


def _triple_line(group, t):
    return (f"a={t.a} H=({t.H.a},{t.H.b},{t.H.mu}) nu=({t.nu[0]},{t.nu[1]}) "
            f"type={oracle.classify(group, t).value}")


def cmd_oracle(args, out) -> int:
    group = GROUPS[args.group]
    if args.n < 1:
        raise ValueError("--n must be >= 1")
    show_triples = args.list_triples or not args.classes
    if show_triples:
        triples = oracle.essential_triples(group, args.n)
        for t in triples:
            out.write(_triple_line(group, t) + "\n")
        out.write(f"{len(triples)} triples\n")
    if args.classes:
        orbits = oracle.conjugacy_classes(group, args.n)
        total = 0
        for i, orbit in enumerate(orbits):
            total += len(orbit)
            out.write(f"class {i}: size={len(orbit)} "
                      f"rep[{_triple_line(group, orbit[0])}]\n")
        out.write(f"{len(orbits)} classes over {total} subgroups\n")
    return 0


def cmd_series(args, out) -> int:
    if args.nmax < 1:
        raise ValueError("--nmax must be >= 1")
    target = None
    if args.entry:
        kind, tv, gv = _parse_entry(args.entry)
        expr = dirichlet.appendix_entry(GROUPS[gv], TYPES[tv], kind)
        if args.compare_formulas:
            target = dirichlet.theorem_sequence(GROUPS[gv], TYPES[tv], kind)
    else:
        expr = dirichlet.parse(args.expr)
        if args.compare_formulas:
            raise ValueError("--compare-formulas needs an --entry selector")
    series = dirichlet.expand(expr, args.nmax)
    emit_rows(((n, series[n]) for n in range(1, args.nmax + 1)),
              args.format, out)
    if target is not None:
        out.write(str(dirichlet.compare(expr, target, args.nmax)) + "\n")
    return 0


def _parse_entry(selector: str):
    parts = selector.lower().split(":")
    if (len(parts) != 3 or parts[0] not in ("s", "c")
            or parts[1] not in TYPES or parts[2] not in GROUPS):
        raise ValueError(f"bad entry selector {selector!r}; "
                         "expected kind:sub:group, e.g. s:z3:g3")
    kind, tv, gv = parts
    if (GROUPS[gv], TYPES[tv], kind) not in dirichlet.APPENDIX_TABLE:
        raise ValueError(f"table cell {selector!r} is not populated")
    return kind, tv, gv


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="covers",
        description="Exact enumeration of n-fold coverings of the flat "
                    "3-manifolds G3 and G5.")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="closed-form counting sequence")
    t.add_argument("--group", required=True, choices=sorted(GROUPS))
    t.add_argument("--kind", required=True, choices=["s", "c"],
                   help="s: subgroups, c: conjugacy classes / coverings")
    t.add_argument("--sub", required=True, choices=sorted(TYPES),
                   help="isomorphism type of the subgroup")
    t.add_argument("--nmax", required=True, type=int)
    t.add_argument("--format", default="csv",
                   choices=["csv", "json", "bfile"])

    v = sub.add_parser("verify", help="run cross-check suites")
    v.add_argument("--nmax", type=int, default=24)
    v.add_argument("--suite", default="all",
                   choices=["formulas", "dirichlet", "lattice", "words",
                            "all"])

    o = sub.add_parser("oracle", help="brute-force triples and classes")
    o.add_argument("--group", required=True, choices=sorted(GROUPS))
    o.add_argument("--n", required=True, type=int)
    o.add_argument("--list-triples", action="store_true")
    o.add_argument("--classes", action="store_true")

    s = sub.add_parser("series", help="Dirichlet coefficient expansion")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--expr", help="expression text, e.g. 'zeta(s)*theta(s)'")
    g.add_argument("--entry", help="table cell selector kind:sub:group")
    s.add_argument("--nmax", required=True, type=int)
    s.add_argument("--compare-formulas", action="store_true")
    s.add_argument("--format", default="csv",
                   choices=["csv", "json", "bfile"])
    return p


COMMANDS = {"table": cmd_table, "verify": cmd_verify,
            "oracle": cmd_oracle, "series": cmd_series}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
