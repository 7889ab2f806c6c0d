from typing import Any

import numpy as np

from hashing.BassConfig import BassConfig
from hashing.BinaryCode import BinaryCode
from hashing.SimHasher import SimHasher
from hashing.StateHasher import StateHasher
from utils.ErrorKind import ErrorKind
from utils.ExplorationError import ExplorationError
from utils.HasherKind import HasherKind
from utils.constants import MAX_INTENSITY


class BassHasher(StateHasher):
    """
    Cell-averaged, bin-quantized image features. The feature of cell (i, j) in channel z is
    floor(B / (255 C^2) * sum of the cell intensities), which lies in [0, B] (B only at full saturation).
    The flattened features are used as the code directly, or fed through SimHash when a downsampler is given.
    """

    def __init__(self, config: BassConfig, simhasher: SimHasher | None = None):
        self.config = config
        self.simhasher = simhasher

    def features(self, image: Any) -> np.ndarray:
        image = np.asarray(image)
        if image.ndim == 2 and self.config.channels == 1:
            image = image[:, :, np.newaxis]
        if image.ndim != 3 or image.shape[2] != self.config.channels:
            raise ExplorationError(ErrorKind.DIMENSION_MISMATCH,
                                   "BASS expects an H x W x %s image, got shape %s." % (self.config.channels, image.shape))
        height, width, channels = image.shape
        cell_size = self.config.cell_size
        if height % cell_size != 0 or width % cell_size != 0:
            raise ExplorationError(ErrorKind.SHAPE_NOT_DIVISIBLE,
                                   "The image size %sx%s is not a multiple of the cell size %s." % (height, width, cell_size))
        if not np.all(np.isfinite(image)) or np.any(image < 0) or np.any(image > MAX_INTENSITY) \
                or np.any(image != np.floor(image)):
            raise ExplorationError(ErrorKind.INTENSITY_OUT_OF_RANGE, "Image intensities must be integers in [0, 255].")

        cells = image.astype(np.int64).reshape(height // cell_size, cell_size, width // cell_size, cell_size, channels)
        cell_sums = cells.sum(axis=(1, 3))
        # integer floor division keeps the formula exact
        return (self.config.nb_bins * cell_sums) // (MAX_INTENSITY * cell_size * cell_size)

    def code(self, observation: Any) -> BinaryCode | np.ndarray:
        flat_features = self.features(image=observation).reshape(-1)  # row-major
        if self.simhasher is not None:
            return self.simhasher.hash(flat_features.astype(np.float64))
        return flat_features

    def get_kind(self) -> HasherKind:
        return HasherKind.BASS
