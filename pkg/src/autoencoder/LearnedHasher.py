from typing import Any

import numpy as np

from autoencoder.AutoencoderModel import AutoencoderModel
from hashing.BinaryCode import BinaryCode
from hashing.SimHasher import SimHasher
from hashing.StateHasher import StateHasher
from utils.ErrorKind import ErrorKind
from utils.ExplorationError import ExplorationError
from utils.HasherKind import HasherKind


class LearnedHasher(StateHasher):
    """
    Hash observations with a frozen autoencoder snapshot: the rounded code of the (normalized) observation is
    projected to k bits with SimHash, the binary code being read as a 0/1 real vector.
    """

    def __init__(self, model: AutoencoderModel, downsampler: SimHasher, input_scale: float = 1.0):
        """
        :param model: An AutoencoderModel, usually a snapshot of the model being trained.
        :param downsampler: A SimHasher whose input dimension is the code dimension of the model.
        :param input_scale: A float dividing raw observations so that they lie in [0, 1] (255 for images).
        """
        if downsampler.input_dim != model.code_dim:
            raise ExplorationError(ErrorKind.DIMENSION_MISMATCH,
                                   "The downsampler expects vectors of dimension %s but the code has %s units." % (downsampler.input_dim, model.code_dim))
        self.model = model
        self.downsampler = downsampler
        self.input_scale = float(input_scale)

    def normalize(self, observation: Any) -> np.ndarray:
        return np.asarray(observation, dtype=np.float64).reshape(-1) / self.input_scale

    def binary_code(self, observation: Any) -> np.ndarray:
        return AutoencoderModel.binarize(self.model.encode(x=self.normalize(observation=observation)))

    def code(self, observation: Any) -> BinaryCode:
        return self.downsampler.hash(self.binary_code(observation=observation).astype(np.float64))

    def update_model(self, model: AutoencoderModel) -> None:
        # swap in a fresh snapshot after retraining; the downsampling projection never changes
        if model.code_dim != self.downsampler.input_dim:
            raise ExplorationError(ErrorKind.DIMENSION_MISMATCH, "The new model has %s code units instead of %s." % (model.code_dim, self.downsampler.input_dim))
        self.model = model

    def get_kind(self) -> HasherKind:
        return HasherKind.LEARNED
