"""Closed-form counts of index-n subgroups and their conjugacy classes.

Every divisor sum below iterates divisors directly, so this module stays
independent of the Dirichlet-series engine; that independence is what
makes the three-way cross-check (oracle / closed form / generating
function) meaningful.
"""

from math import gcd

from .arith import _check_pos, at_ratio, divisors, omega, sigma2, theta
from .oracle import ADMISSIBLE, CoveringType
from .words import GroupId


def _theta_sum(n: int) -> int:
    return sum(theta(k) for k in divisors(n))


def _k_theta_sum(n: int) -> int:
    return sum(k * theta(k) for k in divisors(n))


def _exact_div(num: int, d: int) -> int:
    q, r = divmod(num, d)
    if r:
        raise ArithmeticError(f"non-integral class count {num}/{d}; "
                              "formula transcription bug")
    return q


def _check_admissible(group: GroupId, ctype: CoveringType) -> None:
    if ctype not in ADMISSIBLE[group]:
        raise ValueError(f"type {ctype} does not occur inside {group}")


def s_closed(group: GroupId, ctype: CoveringType, n: int) -> int:
    """Number of index-n subgroups of the given isomorphism type."""
    _check_admissible(group, ctype)
    _check_pos(n)
    if group is GroupId.G3:
        if ctype is CoveringType.G3:
            return _k_theta_sum(n) - at_ratio(_k_theta_sum, n, 3)
        return at_ratio(omega, n, 3)
    if ctype is CoveringType.G5:
        return sum(k * theta(k) for k in divisors(n) if gcd(n // k, 6) == 1)
    if ctype is CoveringType.G3:
        return at_ratio(_k_theta_sum, n, 2) - at_ratio(_k_theta_sum, n, 6)
    if ctype is CoveringType.G2:
        return at_ratio(omega, n, 3) - at_ratio(omega, n, 6)
    return at_ratio(omega, n, 6)


def c_closed(group: GroupId, ctype: CoveringType, n: int) -> int:
    """Number of conjugacy classes of index-n subgroups of the given type,
    i.e. of non-equivalent n-fold coverings with that total space."""
    _check_admissible(group, ctype)
    _check_pos(n)
    if group is GroupId.G3:
        if ctype is CoveringType.G3:
            return (_theta_sum(n) + at_ratio(_theta_sum, n, 3)
                    - 2 * at_ratio(_theta_sum, n, 9))
        return _exact_div(at_ratio(omega, n, 3)
                          + 2 * at_ratio(_theta_sum, n, 3)
                          + 4 * at_ratio(_theta_sum, n, 9), 3)
    if ctype is CoveringType.G5:
        return sum(theta(k) for k in divisors(n) if gcd(n // k, 6) == 1)
    if ctype is CoveringType.G3:
        return at_ratio(_theta_sum, n, 2) - at_ratio(_theta_sum, n, 18)
    if ctype is CoveringType.G2:
        return _exact_div(at_ratio(sigma2, n, 3) + 2 * at_ratio(sigma2, n, 6)
                          - 3 * at_ratio(sigma2, n, 12)
                          + 2 * at_ratio(_theta_sum, n, 3)
                          - 2 * at_ratio(_theta_sum, n, 6), 3)
    return _exact_div(at_ratio(omega, n, 6) + at_ratio(sigma2, n, 6)
                      + 3 * at_ratio(sigma2, n, 12)
                      + 4 * at_ratio(_theta_sum, n, 6)
                      + 4 * at_ratio(_theta_sum, n, 18), 6)
