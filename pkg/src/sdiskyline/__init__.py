"""Skyline queries over sorted dimensional indexes (SDI-RS) with BNL/SFS/SaLSa baselines."""

from .baselines import run_bnl, run_oracle, run_salsa, run_sfs
from .core import (
    Cmp,
    ComparisonCounter,
    Dataset,
    Direction,
    OrderSpec,
    SkylineResult,
    StructuralError,
    Tuple,
    compare_values,
    dominates,
    incomparable,
)
from .datagen import Distribution, GenSpec, generate
from .estimator import SkylineEstimator
from .index import IndexSet, build_index, build_index_set
from .report import RunReport
from .sdi import StopLine, Switching, run_sdi_rs

__version__ = "0.1.0"

__all__ = [
    "Cmp",
    "ComparisonCounter",
    "Dataset",
    "Direction",
    "Distribution",
    "GenSpec",
    "IndexSet",
    "OrderSpec",
    "RunReport",
    "SkylineEstimator",
    "SkylineResult",
    "StopLine",
    "StructuralError",
    "Switching",
    "Tuple",
    "build_index",
    "build_index_set",
    "compare_values",
    "dominates",
    "generate",
    "incomparable",
    "run_bnl",
    "run_oracle",
    "run_salsa",
    "run_sdi_rs",
    "run_sfs",
]
