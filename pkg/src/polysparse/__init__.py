"""Exact computation of sparse cutting-plane closures of rational polytopes."""
from .closure import (
    ClosureSpec,
    CutSet,
    InvalidCutError,
    NotInOrthantError,
    budgeted_closure,
    is_down_monotone,
    sparse_closure,
    symmetrize,
)
from .core import *  # noqa: F401,F403
from .core import __all__ as _core_all
from .families import (
    FamilyParams,
    UnsupportedParameters,
    bernstein_bound,
    closed_form_gap_sym,
    closed_form_sq_dist,
    make_qn,
    make_simplex_family,
    make_symmetric_closure,
    make_symmetric_family,
)
from .metrics import (
    DistanceResult,
    GapRecord,
    NotNestedError,
    gap,
    hausdorff_sq,
    min_norm_point,
    nearest_point,
    verify_dist_gap,
)

__version__ = "0.1.0"

__all__ = list(_core_all) + [
    "ClosureSpec", "CutSet", "DistanceResult", "FamilyParams", "GapRecord", "InvalidCutError",
    "NotInOrthantError", "NotNestedError", "UnsupportedParameters", "bernstein_bound",
    "budgeted_closure", "closed_form_gap_sym", "closed_form_sq_dist", "gap", "hausdorff_sq",
    "is_down_monotone", "make_qn", "make_simplex_family", "make_symmetric_closure",
    "make_symmetric_family", "min_norm_point", "nearest_point", "sparse_closure", "symmetrize",
    "verify_dist_gap",
]
