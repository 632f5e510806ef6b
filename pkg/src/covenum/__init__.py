"""Exact enumeration of n-fold coverings of the flat 3-manifolds G3 and G5.

Counts index-n subgroups and conjugacy classes of subgroups of the two
fundamental groups three independent ways: brute-force orbit enumeration
(oracle), closed-form divisor sums (formulas), and formal Dirichlet
series (dirichlet), with the lattice and word layers underneath.
"""

from .arith import (chi, divisor_sigma, divisors, omega, s_halves, sigma2,
                    t_thirds, theta, theta_via_character)
from .dirichlet import (DirichletExpr, ParseError, appendix_entry, compare,
                        errata_report, expand, parse)
from .formulas import c_closed, s_closed
from .oracle import (CoveringType, EssentialTriple, conjugacy_class_counts,
                     conjugacy_classes, essential_triples, subgroup_counts)
from .words import CanonicalWord, GroupId

__version__ = "0.1.0"

__all__ = [
    "CanonicalWord", "CoveringType", "DirichletExpr", "EssentialTriple",
    "GroupId", "ParseError", "appendix_entry", "c_closed", "chi", "compare",
    "conjugacy_class_counts", "conjugacy_classes", "divisor_sigma",
    "divisors", "errata_report", "essential_triples", "expand", "omega",
    "parse", "s_closed", "s_halves", "sigma2", "subgroup_counts", "t_thirds",
    "theta", "theta_via_character", "__version__",
]
