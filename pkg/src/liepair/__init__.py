"""Exact deformation theory of finite-dimensional Lie algebra pairs.

Computes, over local Artinian coefficient algebras and with exact rational
arithmetic: the cubic bracket calculus on Hom(Lambda^* a, B), Maurer-Cartan
elements and their standard-inclusion realizations, gauge equivalence by
exponentials of derivations, and the cohomological tangent spaces of the
weak, semistrict, and matched deformation functors.
"""

from .artin import (
    ArtinAlgebra,
    ArtinElement,
    ArtinError,
    ArtinMorphism,
    NotAUnit,
    build_truncated,
    dual_numbers,
    square_zero,
    validate_artin,
)
from .liealg import (
    Derivation,
    LieAlgebra,
    LieError,
    LiePair,
    NotASubalgebra,
    commutator,
    derivation_space,
    inner_derivation,
    inner_derivation_space,
    is_matched,
    validate_lie,
    validate_pair,
)
from .omega import OmegaElement, b1_der, b2_der, b3_der, bracket2, bracket3, d_ce
from .mc import (
    GaugeParameter,
    InternalInconsistency,
    MCElement,
    MCError,
    NotVerified,
    OmegaFamily,
    gauge_act,
    gauge_exp_terms,
    gauge_solve,
    is_mc,
    mc_extend,
    mc_push,
    mc_residual,
)
from .deform import (
    AMap,
    DeformError,
    SmallAutomorphism,
    act_on_standard,
    equiv_decide,
    exp_derivation,
    induced_bracket,
    log_automorphism,
    standard_inclusion,
    standard_realization,
    std_check,
    xy_identity_check,
    xy_sequences,
)
from .cohomology import CohomologyReport, classes_equal, h1_semistrict, h1_weak, h_ce
from .catalog import get_algebra, get_pair

__all__ = [name for name in dir() if not name.startswith("_")]
