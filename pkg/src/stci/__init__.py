"""Set-theoretic complete intersection extensions of monomial curves."""
__version__ = "0.1.0"

from ._kernels import BACKEND
from .curves import (
    ExtensionSpec,
    FStarResult,
    Kind,
    MonomialCurve,
    Parameterization,
    affine_G,
    base_equations,
    binomial_rules,
    build_fstar,
    make_extension,
    parameterize,
    projective_F,
)
from .errors import ConditionFails, NotInSemigroup, ShapeMismatch, StciError
from .gluing import GluingDecision, SemigroupSplit, bad_extension_gluing, check_all_splits, check_split
from .mpoly import RewriteRule, SparsePoly, gamma_ell, homogenize, parse_poly, reduce, substitute_monomials
from .numsg import Representation, SemigroupGens, degree, delta_gcds, is_member
from .oracle import FiniteFieldConfig, check_eq1, toric_binomials, vanishes_on, zero_set_compare
