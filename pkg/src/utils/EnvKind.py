from enum import Enum


class EnvKind(Enum):
    CHAIN = "chain"
    GRIDWORLD = "gridworld"
    POINT_MASS = "point_mass"
