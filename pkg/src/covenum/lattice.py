"""Finite-index sublattices of Z^2 and Z^3 in generator normal form.

A rank-2 sublattice of index n is stored as the pair of generators
(a, 0), (mu, b) with a*b = n and 0 <= mu < a; a rank-3 one as
(a, 0, 0), (mu, b, 0), (nu, lam, c).  Everything here is exact integer
arithmetic: normal forms come from Euclidean column reduction, coset
counting from determinants of joint normal forms.
"""

from dataclasses import dataclass
from math import gcd

from .arith import _check_pos

Vec2 = tuple[int, int]

# order-3 automorphism of Z^2, (u, v) -> (-v, u-v)
ELL = ((0, -1), (1, -1))


def mat_apply(m, v: Vec2) -> Vec2:
    return (m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1])


def apply_ell(v: Vec2) -> Vec2:
    return (-v[1], v[0] - v[1])


@dataclass(frozen=True, order=True)
class Sublattice2:
    """Sublattice of Z^2 generated by (a, 0) and (mu, b)."""

    a: int
    b: int
    mu: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1 or not 0 <= self.mu < self.a:
            raise ValueError(f"invalid normal form {(self.a, self.b, self.mu)}")

    @property
    def index(self) -> int:
        return self.a * self.b

    @property
    def basis(self) -> tuple[Vec2, Vec2]:
        return ((self.a, 0), (self.mu, self.b))

    def contains(self, v: Vec2) -> bool:
        if v[1] % self.b != 0:
            return False
        return (v[0] - (v[1] // self.b) * self.mu) % self.a == 0

    def cosets(self):
        """Canonical representatives of Z^2 / H, in lexicographic order."""
        return [(i, j) for i in range(self.a) for j in range(self.b)]


@dataclass(frozen=True, order=True)
class Sublattice3:
    """Sublattice of Z^3 generated by (a,0,0), (mu,b,0), (nu,lam,c)."""

    a: int
    b: int
    c: int
    mu: int
    nu: int
    lam: int

    def __post_init__(self):
        ok = (self.a >= 1 and self.b >= 1 and self.c >= 1
              and 0 <= self.mu < self.a and 0 <= self.nu < self.a
              and 0 <= self.lam < self.b)
        if not ok:
            raise ValueError("invalid normal form")

    @property
    def index(self) -> int:
        return self.a * self.b * self.c


def _xgcd(x: int, y: int):
    """(g, s, t) with g = gcd(x, y) > 0 and s*x + t*y = g."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while y:
        q = x // y
        x, y = y, x - q * y
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if x < 0:
        x, s0, t0 = -x, -s0, -t0
    return x, s0, t0


def hnf2(gens) -> Sublattice2:
    """Normal form of the lattice spanned by the given vectors.

    Raises ValueError when the span does not have finite index in Z^2.
    """
    firsts = []
    w = (0, 0)
    for u in gens:
        if u[1] == 0:
            firsts.append(u[0])
        elif w[1] == 0:
            w = u if u[1] > 0 else (-u[0], -u[1])
        else:
            g, s, t = _xgcd(w[1], u[1])
            firsts.append((u[1] // g) * w[0] - (w[1] // g) * u[0])
            w = (s * w[0] + t * u[0], g)
    a = 0
    for f in firsts:
        a = gcd(a, f)
    if a == 0 or w[1] == 0:
        raise ValueError("generators do not span a finite-index lattice")
    return Sublattice2(a, w[1], w[0] % a)


def sublattices2(n: int) -> list[Sublattice2]:
    """All index-n sublattices of Z^2, lexicographic in (a, b, mu).

    There are sigma_1(n) of them.
    """
    _check_pos(n)
    out = []
    for a in range(1, n + 1):
        if n % a == 0:
            b = n // a
            out.extend(Sublattice2(a, b, mu) for mu in range(a))
    return out


def sublattices3(n: int) -> list[Sublattice3]:
    """All index-n sublattices of Z^3; there are omega(n) of them."""
    _check_pos(n)
    out = []
    for a in range(1, n + 1):
        if n % a:
            continue
        for b in range(1, n // a + 1):
            if (n // a) % b:
                continue
            c = n // (a * b)
            out.extend(Sublattice3(a, b, c, mu, nu, lam)
                       for mu in range(a) for nu in range(a) for lam in range(b))
    return out


def is_ell_invariant(H: Sublattice2) -> bool:
    """Whether ell(H) = H.  Membership of the two basis images suffices."""
    return all(H.contains(apply_ell(g)) for g in H.basis)


def ell_invariant_sublattices(n: int) -> list[Sublattice2]:
    """All ell-invariant index-n sublattices; there are theta(n) of them."""
    return [H for H in sublattices2(n) if is_ell_invariant(H)]


def transform(H: Sublattice2, m) -> Sublattice2:
    """Image lattice m(H) for an invertible integer matrix m."""
    return hnf2([mat_apply(m, g) for g in H.basis])


def reduce_mod(H: Sublattice2, v: Vec2) -> Vec2:
    """Canonical representative (i, j), 0 <= i < a, 0 <= j < b, of v + H."""
    j = v[1] % H.b
    v0 = v[0] - ((v[1] - j) // H.b) * H.mu
    return (v0 % H.a, j)


def quotient_order(H: Sublattice2, extra) -> int:
    """Order of Z^2 / <H, extra>."""
    return hnf2(list(H.basis) + list(extra)).index


def two_torsion_cosets(H: Sublattice2) -> int:
    """Number of cosets nu of Z^2/H with 2*nu = 0."""
    return quotient_order(H, [(2, 0), (0, 2)])


def ell_fixed_cosets(H: Sublattice2) -> int:
    """Number of cosets nu of Z^2/H with ell(nu) = nu; needs ell(H) = H.

    (1,-1) and (1,2) are the images of the standard basis under I - ell,
    so the count is the kernel size of I - ell on Z^2/H.
    """
    if not is_ell_invariant(H):
        raise ValueError(f"{H} is not ell-invariant")
    return quotient_order(H, [(1, -1), (1, 2)])


def two_torsion_cosets_scan(H: Sublattice2) -> int:
    """two_torsion_cosets by direct scan of all coset representatives."""
    return sum(1 for v in H.cosets() if H.contains((2 * v[0], 2 * v[1])))


def ell_fixed_cosets_scan(H: Sublattice2) -> int:
    """ell_fixed_cosets by direct scan of all coset representatives."""
    if not is_ell_invariant(H):
        raise ValueError(f"{H} is not ell-invariant")
    return sum(1 for v in H.cosets()
               if reduce_mod(H, apply_ell(v)) == reduce_mod(H, v))
