from enum import Enum


class SweepAxis(Enum):
    K = "k"
    BETA = "beta"
    BACKEND = "backend"
    COUNT_MODE = "count_mode"
    GRID_SIZE = "grid_size"
