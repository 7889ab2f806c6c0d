from typing import Any

import numpy as np

from hashing.BinaryCode import BinaryCode
from hashing.StateHasher import StateHasher
from utils.ErrorKind import ErrorKind
from utils.ExplorationError import ExplorationError
from utils.HasherKind import HasherKind
from utils.utils import as_real_vector, new_generator


class SimHasher(StateHasher):
    """
    Angular locality-sensitive hashing: the code of x is the sign pattern of A.x, where A is a k x D matrix
    with i.i.d. standard-normal entries. sgn(0) is +1, stored as bit 1.
    """

    def __init__(self, k: int, input_dim: int, seed: int | None = None, matrix: np.ndarray | None = None):
        """
        Create a new SimHash function.
        :param k: An integer being the code length (number of bits).
        :param input_dim: An integer being the dimension D of the hashed vectors.
        :param seed: An integer used to seed the PCG64 generator drawing A. Same (k, D, seed), same A.
        :param matrix: An optional k x D matrix used instead of a random one (e.g., handcrafted projections).
        """
        if k < 1 or input_dim < 1:
            raise ExplorationError(ErrorKind.INVALID_DIMENSION,
                                   "SimHash needs k >= 1 and D >= 1, got k=%s and D=%s." % (k, input_dim))
        self.k = k
        self.input_dim = input_dim
        self.seed = seed
        if matrix is None:
            self.matrix = new_generator(seed).standard_normal(size=(k, input_dim))
        else:
            self.matrix = np.array(matrix, dtype=np.float64)
            if self.matrix.shape != (k, input_dim):
                raise ExplorationError(ErrorKind.DIMENSION_MISMATCH,
                                       "The projection matrix has shape %s instead of %s." % (self.matrix.shape, (k, input_dim)))
        # A is drawn once and never mutated
        self.matrix.setflags(write=False)

    @classmethod
    def from_matrix(cls, matrix: np.ndarray | list) -> "SimHasher":
        matrix = np.array(matrix, dtype=np.float64)
        if matrix.ndim != 2:
            raise ExplorationError(ErrorKind.INVALID_DIMENSION, "A projection matrix has two dimensions.")
        return cls(k=matrix.shape[0], input_dim=matrix.shape[1], matrix=matrix)

    def hash(self, x: Any) -> BinaryCode:
        vector = as_real_vector(x=x, expected_length=self.input_dim, what="hashed vector")
        return BinaryCode(self.matrix @ vector >= 0)

    def code(self, observation: Any) -> BinaryCode:
        # images and vectors alike are flattened; no rescaling is needed since positive scaling preserves the signs
        return self.hash(np.asarray(observation, dtype=np.float64).reshape(-1))

    def get_kind(self) -> HasherKind:
        return HasherKind.SIMHASH
