from enum import Enum


class QStateKey(Enum):
    HASH = "hash"
    EXACT = "exact"
