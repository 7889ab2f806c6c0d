import numpy as np


class BinaryCode:
    """
    A fixed-width bit vector produced by a hash function; the sign pattern of a projection, stored as 0/1.
    Instances are immutable.
    """

    def __init__(self, bits: np.ndarray | list | tuple):
        self.bits = np.array(bits, dtype=np.uint8).reshape(-1)
        if np.any(self.bits > 1):
            raise ValueError("A binary code only contains 0 and 1 values.")
        self.bits.setflags(write=False)

    def __len__(self) -> int:
        return int(self.bits.shape[0])

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryCode):
            return NotImplemented
        return len(self) == len(other) and bool(np.array_equal(self.bits, other.bits))

    def __hash__(self) -> int:
        return hash((len(self), self.bits.tobytes()))

    def to_tuple(self) -> tuple[int, ...]:
        return tuple(int(bit) for bit in self.bits)

    def to_real_vector(self) -> np.ndarray:
        return self.bits.astype(np.float64)

    def __repr__(self) -> str:
        return "BinaryCode(" + "".join(str(bit) for bit in self.bits) + ")"
