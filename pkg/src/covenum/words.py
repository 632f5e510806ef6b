"""Canonical-form word arithmetic in the fundamental groups of G3 and G5.

Both groups are Z^2-by-Z: every element has a unique canonical form
x^a y^b z^c, and conjugation by z acts on the (a, b) exponent plane by an
integer matrix of order 3 (G3) or 6 (G5).  The product of two canonical
forms twists the second word's translation part by the z-power of the
first, which is exactly the case table of the presentation's
multiplication law.
"""

from dataclasses import dataclass
from enum import Enum

from .lattice import mat_apply


class GroupId(Enum):
    G3 = "g3"
    G5 = "g5"


def _mat_mul(m1, m2):
    return tuple(tuple(sum(m1[i][k] * m2[k][j] for k in range(2))
                       for j in range(2)) for i in range(2))


IDENTITY_MAT = ((1, 0), (0, 1))

# conjugation by z on <x, y> exponents: order 6 in G5, its square in G3
M_G5 = ((1, -1), (1, 0))
L_G3 = _mat_mul(M_G5, M_G5)


def _powers(m, k):
    out = [IDENTITY_MAT]
    for _ in range(k - 1):
        out.append(_mat_mul(m, out[-1]))
    return tuple(out)


# twist applied to the right factor's (a, b) when the left factor has
# z-exponent c: TWIST[group][c mod order]
TWIST = {GroupId.G3: _powers(L_G3, 3), GroupId.G5: _powers(M_G5, 6)}


def z_action(group: GroupId):
    """Matrix of conjugation by z on translation exponents."""
    return L_G3 if group is GroupId.G3 else M_G5


def twist(group: GroupId, c: int):
    table = TWIST[group]
    return table[c % len(table)]


@dataclass(frozen=True)
class CanonicalWord:
    """The element x^a y^b z^c of the chosen group."""

    group: GroupId
    a: int
    b: int
    c: int

    @property
    def translation(self) -> tuple[int, int]:
        return (self.a, self.b)

    def __repr__(self):
        return f"{self.group.value}:x^{self.a} y^{self.b} z^{self.c}"


def word(group: GroupId, a: int, b: int, c: int) -> CanonicalWord:
    return CanonicalWord(group, a, b, c)


def identity(group: GroupId) -> CanonicalWord:
    return CanonicalWord(group, 0, 0, 0)


def generators(group: GroupId):
    """The generators x, y, z."""
    return (CanonicalWord(group, 1, 0, 0),
            CanonicalWord(group, 0, 1, 0),
            CanonicalWord(group, 0, 0, 1))


def _same_group(w1: CanonicalWord, w2: CanonicalWord) -> None:
    if w1.group is not w2.group:
        raise ValueError(f"mixed groups: {w1.group} and {w2.group}")


def mul(w1: CanonicalWord, w2: CanonicalWord) -> CanonicalWord:
    _same_group(w1, w2)
    u, v = mat_apply(twist(w1.group, w1.c), (w2.a, w2.b))
    return CanonicalWord(w1.group, w1.a + u, w1.b + v, w1.c + w2.c)


def inv(w: CanonicalWord) -> CanonicalWord:
    u, v = mat_apply(twist(w.group, -w.c), (w.a, w.b))
    return CanonicalWord(w.group, -u, -v, -w.c)


def conj(w: CanonicalWord, g: CanonicalWord) -> CanonicalWord:
    """g * w * g^-1."""
    _same_group(w, g)
    return mul(mul(g, w), inv(g))


def phi(w: CanonicalWord) -> int:
    """The epimorphism onto Z that kills the translation subgroup."""
    return w.c


def power(w: CanonicalWord, k: int) -> CanonicalWord:
    out = identity(w.group)
    step = w if k >= 0 else inv(w)
    for _ in range(abs(k)):
        out = mul(out, step)
    return out
