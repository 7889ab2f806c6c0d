from enum import Enum


class HasherKind(Enum):
    SIMHASH = "simhash"
    BASS = "bass"
    GRID = "grid"
    LEARNED = "learned"
    NONE = "none"
