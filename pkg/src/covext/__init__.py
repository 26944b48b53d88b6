"""Extending covers of the boundary of a surface to covers of the surface."""

from .cyclespec import INF, CycleTypeSpec
from .errors import BudgetExceeded
from .lazy import LazyPerm
from .perm import CycleType, Perm
from .surface import SurfaceRep, SurfaceSpec

__all__ = ["INF", "CycleTypeSpec", "BudgetExceeded", "LazyPerm", "CycleType", "Perm", "SurfaceRep", "SurfaceSpec"]
__version__ = "0.1.0"
