from typing import Any

import numpy as np

from hashing.BinaryCode import BinaryCode
from utils.HasherKind import HasherKind


class StateHasher:
    """
    A hash function discretizing observations into codes (binary codes or integer vectors) that can be counted.
    """

    def code(self, observation: Any) -> BinaryCode | np.ndarray:
        raise NotImplementedError("The method code() has to be overridden in every child class.")

    def get_kind(self) -> HasherKind:
        raise NotImplementedError("The method get_kind() has to be overridden in every child class.")
