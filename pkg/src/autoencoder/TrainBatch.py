from dataclasses import dataclass

import numpy as np

from utils.ErrorKind import ErrorKind
from utils.ExplorationError import ExplorationError


@dataclass(frozen=True)
class TrainBatch:
    """
    N observation vectors normalized to [0, 1], one per row.
    """
    inputs: np.ndarray

    def __post_init__(self):
        inputs = np.array(self.inputs, dtype=np.float64)
        if inputs.ndim == 1:
            inputs = inputs[np.newaxis, :]
        if inputs.ndim != 2 or inputs.shape[0] == 0 or inputs.shape[1] == 0:
            raise ExplorationError(ErrorKind.EMPTY_BATCH, "A training batch needs at least one non-empty sample.")
        if not np.all(np.isfinite(inputs)):
            raise ExplorationError(ErrorKind.NON_FINITE_INPUT, "The training batch contains non-finite values.")
        if np.any(inputs < 0) or np.any(inputs > 1):
            raise ExplorationError(ErrorKind.INTENSITY_OUT_OF_RANGE, "Training inputs must be normalized to [0, 1].")
        inputs.setflags(write=False)
        object.__setattr__(self, "inputs", inputs)

    def __len__(self) -> int:
        return int(self.inputs.shape[0])
