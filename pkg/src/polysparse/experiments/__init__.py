from .common import ResourceRefusal
from .dense_budget import run_dense_budget
from .directional import run_directional
from .lp_relax import run_lp_relax
from .report import ExperimentReport
from .rng import RandomSource, wilson_interval
from .rotation import run_rotation
from .verify import verify_suite

__all__ = [
    "ExperimentReport", "RandomSource", "ResourceRefusal", "run_dense_budget",
    "run_directional", "run_lp_relax", "run_rotation", "verify_suite", "wilson_interval",
]
