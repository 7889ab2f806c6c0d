from typing import Any

import numpy as np

from hashing.GridHashConfig import GridHashConfig
from hashing.StateHasher import StateHasher
from utils.HasherKind import HasherKind
from utils.utils import as_real_vector


class GridHasher(StateHasher):
    """
    Feature-grid discretization: each coordinate x_i is replaced by floor(x_i / s_i).
    Mathematical floor, so that cells tile the real line uniformly (-0.1 falls in cell -1).
    """

    def __init__(self, config: GridHashConfig):
        self.config = config
        self.grid_sizes = np.asarray(config.grid_sizes, dtype=np.float64)

    def hash(self, x: Any) -> np.ndarray:
        vector = as_real_vector(x=x, expected_length=len(self.grid_sizes), what="grid-hashed vector")
        return np.floor(vector / self.grid_sizes).astype(np.int64)

    def code(self, observation: Any) -> np.ndarray:
        return self.hash(np.asarray(observation, dtype=np.float64).reshape(-1))

    def get_kind(self) -> HasherKind:
        return HasherKind.GRID
