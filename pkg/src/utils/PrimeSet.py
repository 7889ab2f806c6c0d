from enum import Enum


class PrimeSet(Enum):
    SIX_M = "6M"
    NINETY_M = "90M"
    SIX_K = "6K"
