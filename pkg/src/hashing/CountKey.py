import struct
from dataclasses import dataclass
from typing import Any

import numpy as np

from hashing.BinaryCode import BinaryCode
from utils.ErrorKind import ErrorKind
from utils.ExplorationError import ExplorationError

BINARY_TAG = b"B"
INTEGER_TAG = b"I"
NO_ACTION = b"\x00"
WITH_ACTION = b"\x01"


@dataclass(frozen=True)
class CountKey:
    """
    The canonical byte encoding of a code, optionally paired with an action id, used as counting key.

    Layout (little-endian):
      tag (1 byte: 'B' for a binary code, 'I' for an integer vector)
      number of elements (uint32)
      payload: packed bits (most significant bit first) or int64 values
      action marker (1 byte: 0x00 without action, 0x01 with action) followed, if any, by the action id (uint64)
    """
    key_bytes: bytes
    action: int | None = None

    @classmethod
    def encode(cls, code: BinaryCode | Any, action: int | None = None) -> "CountKey":
        if isinstance(code, BinaryCode):
            if len(code) == 0:
                raise ExplorationError(ErrorKind.EMPTY_CODE, "Cannot encode an empty code.")
            body = BINARY_TAG + struct.pack("<I", len(code)) + np.packbits(code.bits).tobytes()
        else:
            values = np.asarray(code)
            if values.size == 0:
                raise ExplorationError(ErrorKind.EMPTY_CODE, "Cannot encode an empty code.")
            if not np.issubdtype(values.dtype, np.integer):
                if not np.all(np.isfinite(values)) or np.any(values != np.floor(values)):
                    raise ExplorationError(ErrorKind.NON_FINITE_INPUT, "Integer codes only contain integer values.")
            values = values.reshape(-1).astype("<i8")
            body = INTEGER_TAG + struct.pack("<I", values.shape[0]) + values.tobytes()

        if action is None:
            return cls(key_bytes=body + NO_ACTION, action=None)
        if action < 0:
            raise ExplorationError(ErrorKind.INVALID_ACTION, "Action ids are non-negative, got %s." % action)
        return cls(key_bytes=body + WITH_ACTION + struct.pack("<Q", int(action)), action=int(action))

    def __len__(self) -> int:
        return len(self.key_bytes)
