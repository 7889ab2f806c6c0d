from hashing.CountKey import CountKey
from counting.VisitCounter import VisitCounter
from utils.CounterBackend import CounterBackend
from utils.ErrorKind import ErrorKind
from utils.ExplorationError import ExplorationError
from utils.constants import MAX_COUNT

# bytes of one stored count
COUNT_NB_BYTES = 8


class ExactCounter(VisitCounter):
    """
    A hash table mapping the bytes of a CountKey to its exact number of increments.
    """

    def __init__(self):
        self.table: dict[bytes, int] = {}

    def increment(self, key: CountKey) -> int:
        current = self.table.get(key.key_bytes, 0)
        if current >= MAX_COUNT:
            raise ExplorationError(ErrorKind.COUNT_OVERFLOW, "The count of a key would exceed 2^64 - 1.")
        self.table[key.key_bytes] = current + 1
        return current + 1

    def query(self, key: CountKey) -> int:
        return self.table.get(key.key_bytes, 0)

    def get_nb_distinct_keys(self) -> int:
        return len(self.table)

    def get_nb_bytes(self) -> int:
        # payload size: the key bytes plus one 64-bit count per entry
        return sum(len(key_bytes) + COUNT_NB_BYTES for key_bytes in self.table)

    def get_backend(self) -> CounterBackend:
        return CounterBackend.EXACT
