from enum import Enum


class ObservationKind(Enum):
    VECTOR = "vector"
    IMAGE = "image"
