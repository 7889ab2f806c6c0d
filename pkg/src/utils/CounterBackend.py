from enum import Enum


class CounterBackend(Enum):
    EXACT = "exact"
    COUNT_MIN = "cms"
