"""Brute-force enumeration of finite-index subgroups via essential triples.

A finite-index subgroup of either ambient group is pinned down by the
triple (a, H, nu): the minimal positive z-exponent a, the intersection H
with the translation plane, and the coset nu of the leading translation
part.  This module materializes that bijection, classifies isomorphism
types, rebuilds generator words, computes the conjugation action on
triples, and counts conjugacy classes by plain orbit enumeration.  It is
the ground truth the closed formulas are checked against.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import gcd

from .arith import _check_pos, divisors
from .lattice import (Sublattice2, hnf2, mat_apply, reduce_mod, sublattices2,
                      transform)
from .words import (CanonicalWord, GroupId, conj, generators, identity, inv,
                    phi, twist, word, z_action)


class CoveringType(Enum):
    """Isomorphism type of a subgroup / total space of a covering."""

    Z3 = "z3"
    G2 = "g2"
    G3 = "g3"
    G5 = "g5"


ADMISSIBLE = {
    GroupId.G3: (CoveringType.G3, CoveringType.Z3),
    GroupId.G5: (CoveringType.G5, CoveringType.G3, CoveringType.G2,
                 CoveringType.Z3),
}


@dataclass(frozen=True, order=True)
class EssentialTriple:
    """(a, H, nu) with nu stored as its canonical coset representative."""

    a: int
    H: Sublattice2
    nu: tuple[int, int]


def is_normal_in(group: GroupId, H: Sublattice2) -> bool:
    """Whether H, sitting inside the translation plane, is normal in the
    ambient group, i.e. invariant under conjugation by z."""
    m = z_action(group)
    return all(H.contains(mat_apply(m, g)) for g in H.basis)


def essential_triples(group: GroupId, n: int) -> list[EssentialTriple]:
    """All essential triples of index n, in lexicographic order.

    H must be normal in the ambient group whenever 3 does not divide a;
    otherwise H is an arbitrary sublattice of index n/a.
    """
    _check_pos(n)
    out = []
    for a in divisors(n):
        sub = sublattices2(n // a)
        if a % 3 != 0:
            sub = [H for H in sub if is_normal_in(group, H)]
        for H in sub:
            out.extend(EssentialTriple(a, H, nu) for nu in H.cosets())
    return sorted(out)


def classify(group: GroupId, t: EssentialTriple) -> CoveringType:
    if group is GroupId.G3:
        return CoveringType.Z3 if t.a % 3 == 0 else CoveringType.G3
    return {6: CoveringType.Z3, 3: CoveringType.G2,
            2: CoveringType.G3, 1: CoveringType.G5}[gcd(t.a, 6)]


def reconstruct_generators(group: GroupId, t: EssentialTriple):
    """Words X, Y (basis of H at z-exponent 0) and Z = nu * z^a."""
    (p1, q1), (p2, q2) = t.H.basis
    return [word(group, p1, q1, 0), word(group, p2, q2, 0),
            word(group, t.nu[0], t.nu[1], t.a)]


@lru_cache(maxsize=None)
def _transform(H: Sublattice2, m) -> Sublattice2:
    return transform(H, m)


def _gamma_conj(group: GroupId, t: EssentialTriple, vec) -> EssentialTriple:
    """Conjugation by the translation word with exponent vector vec."""
    im = mat_apply(twist(group, t.a), vec)
    shifted = (t.nu[0] + vec[0] - im[0], t.nu[1] + vec[1] - im[1])
    return EssentialTriple(t.a, t.H, reduce_mod(t.H, shifted))


def conjugate_triple_by_word(group: GroupId, t: EssentialTriple,
                             u: CanonicalWord) -> EssentialTriple:
    """Image of t under conjugation by an arbitrary word u = gamma * z^c.

    Ad_u = Ad_gamma composed with Ad_{z^c}; z^c maps (a, H, nu) to
    (a, psi^c(H), psi^c(nu)) and gamma shifts nu by (I - psi^a)(gamma).
    """
    if u.group is not group:
        raise ValueError(f"word from {u.group}, triple from {group}")
    m = twist(group, u.c)
    H = t.H if m == twist(group, 0) else _transform(t.H, m)
    t2 = EssentialTriple(t.a, H, reduce_mod(H, mat_apply(m, t.nu)))
    return _gamma_conj(group, t2, u.translation)


_GEN_VECTORS = {(1, 0), (-1, 0), (0, 1), (0, -1)}


def conjugate_triple(group: GroupId, t: EssentialTriple,
                     gen: CanonicalWord) -> EssentialTriple:
    """Conjugation by one of x, y, z or an inverse; other words rejected."""
    ok = ((gen.c == 0 and gen.translation in _GEN_VECTORS) or
          (gen.c in (1, -1) and gen.translation == (0, 0)))
    if not ok:
        raise ValueError(f"not a single-letter generator: {gen}")
    return conjugate_triple_by_word(group, t, gen)


def extract_triple(group: GroupId, gens) -> EssentialTriple:
    """Recover (a, H, nu) from generator words.

    a is the gcd of the z-exponents; H is spanned by the z-exponent-0
    translation parts, closed under conjugation by z^a; nu is the common
    coset of the translation parts of the minimal-z-exponent generators.
    """
    a = 0
    for w in gens:
        a = gcd(a, phi(w))
    if a == 0:
        raise ValueError("generators have no z-component")
    gamma = [w.translation for w in gens if phi(w) == 0]
    H = hnf2(gamma)
    psi_a = twist(group, a)
    while True:
        H2 = hnf2(list(H.basis) + [mat_apply(psi_a, g) for g in H.basis])
        if H2 == H:
            break
        H = H2
    minimal = [w if phi(w) == a else inv(w)
               for w in gens if abs(phi(w)) == a]
    if not minimal:
        raise ValueError("no generator with the minimal z-exponent")
    cosets = {reduce_mod(H, w.translation) for w in minimal}
    if len(cosets) != 1:
        raise ValueError(f"inconsistent nu representatives: {cosets}")
    return EssentialTriple(a, H, cosets.pop())


def conjugate_triple_slow(group: GroupId, t: EssentialTriple,
                          g: CanonicalWord) -> EssentialTriple:
    """Word-level conjugation of the reconstructed generators followed by
    triple re-extraction.  Ground truth for conjugate_triple."""
    return extract_triple(group, [conj(w, g)
                                  for w in reconstruct_generators(group, t)])


def subgroup_counts(group: GroupId, n: int) -> dict:
    """Number of index-n subgroups per isomorphism type."""
    counts = {ctype: 0 for ctype in ADMISSIBLE[group]}
    for t in essential_triples(group, n):
        counts[classify(group, t)] += 1
    return counts


def _orbits(group: GroupId, triples, gen_words):
    """Orbit decomposition of a set of triples closed under the given
    conjugating words (inverses are added automatically)."""
    gens = list(gen_words) + [inv(g) for g in gen_words]
    index = {t: i for i, t in enumerate(triples)}
    seen = [False] * len(triples)
    orbits = []
    for i, t in enumerate(triples):
        if seen[i]:
            continue
        seen[i] = True
        orbit = [t]
        stack = [t]
        while stack:
            cur = stack.pop()
            for g in gens:
                nxt = conjugate_triple_by_word(group, cur, g)
                j = index[nxt]
                if not seen[j]:
                    seen[j] = True
                    orbit.append(nxt)
                    stack.append(nxt)
        orbits.append(sorted(orbit))
    return orbits


def conjugacy_classes(group: GroupId, n: int):
    """Orbits of the essential triples under conjugation by the whole
    ambient group, each orbit sorted, in order of smallest member."""
    x, y, z = generators(group)
    return _orbits(group, essential_triples(group, n), [x, y, z])


def conjugacy_class_counts(group: GroupId, n: int) -> dict:
    """Number of conjugacy classes of index-n subgroups per type."""
    counts = {ctype: 0 for ctype in ADMISSIBLE[group]}
    for orbit in conjugacy_classes(group, n):
        types = {classify(group, t) for t in orbit}
        if len(types) != 1:
            raise AssertionError(f"mixed-type orbit: {orbit}")
        counts[types.pop()] += 1
    return counts


def fixed_triple_count(group: GroupId, n: int, u: CanonicalWord,
                       ctype: CoveringType) -> int:
    """Number of type-ctype triples fixed by conjugation with u."""
    return sum(1 for t in essential_triples(group, n)
               if classify(group, t) is ctype
               and conjugate_triple_by_word(group, t, u) == t)


def partial_classes(group: GroupId, n: int, ctype: CoveringType,
                    z_step: int):
    """Orbits of the type-ctype triples under conjugation by the subgroup
    generated by the translation plane and z^z_step.

    Returns (orbits, class_of) where class_of maps a triple to its orbit
    index.  These are the intermediate conjugacy classes of the two-stage
    counting scheme.
    """
    triples = [t for t in essential_triples(group, n)
               if classify(group, t) is ctype]
    gen_words = [word(group, 1, 0, 0), word(group, 0, 1, 0),
                 word(group, 0, 0, z_step)]
    orbits = _orbits(group, triples, gen_words)
    class_of = {t: i for i, orbit in enumerate(orbits) for t in orbit}
    return orbits, class_of


def fixed_partial_class_count(group: GroupId, n: int, ctype: CoveringType,
                              z_step: int, u: CanonicalWord) -> int:
    """Number of partial classes (w.r.t. z^z_step) mapped to themselves by
    conjugation with u.  Requires u to normalize the intermediate subgroup,
    which any word does since the translation plane is normal."""
    orbits, class_of = partial_classes(group, n, ctype, z_step)
    count = 0
    for orbit in orbits:
        image = conjugate_triple_by_word(group, orbit[0], u)
        if class_of[image] == class_of[orbit[0]]:
            count += 1
    return count


def burnside_class_counts(group: GroupId, n: int) -> dict:
    """Conjugacy-class counts via the fixed-point average over the finite
    quotient by <x^n, y^n, z^6>, which acts trivially on index-n triples.

    Cross-check for conjugacy_class_counts; only sensible for small n.
    """
    _check_pos(n)
    order = 6 * n * n
    counts = {}
    for ctype in ADMISSIBLE[group]:
        triples = [t for t in essential_triples(group, n)
                   if classify(group, t) is ctype]
        total = 0
        for k in range(6):
            for i in range(n):
                for j in range(n):
                    u = word(group, i, j, k)
                    total += sum(
                        1 for t in triples
                        if conjugate_triple_by_word(group, t, u) == t)
        q, r = divmod(total, order)
        if r:
            raise AssertionError(
                f"Burnside average not integral for {group}, n={n}: "
                f"{total}/{order}")
        counts[ctype] = q
    return counts
