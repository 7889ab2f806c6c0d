import math
from dataclasses import dataclass

from utils.ErrorKind import ErrorKind
from utils.ExplorationError import ExplorationError


@dataclass(frozen=True)
class GridHashConfig:
    """
    The per-dimension cell widths s_i of a feature grid.
    """
    grid_sizes: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "grid_sizes", tuple(float(size) for size in self.grid_sizes))
        if len(self.grid_sizes) == 0:
            raise ExplorationError(ErrorKind.INVALID_DIMENSION, "A feature grid needs at least one dimension.")
        for size in self.grid_sizes:
            if not math.isfinite(size) or size <= 0:
                raise ExplorationError(ErrorKind.NON_POSITIVE_GRID_SIZE,
                                       "Grid sizes must be strictly positive, got %s." % (self.grid_sizes, ))
