import math
from dataclasses import dataclass
from typing import Any

from hashing.BinaryCode import BinaryCode
from hashing.CountKey import CountKey
from utils.CountMode import CountMode
from utils.ErrorKind import ErrorKind
from utils.ExplorationError import ExplorationError


@dataclass(frozen=True)
class BonusConfig:
    """
    The exploration bonus r+ = beta / sqrt(n), counting states or state-action pairs.
    """
    beta: float
    count_mode: CountMode = CountMode.STATE

    def __post_init__(self):
        if not math.isfinite(self.beta) or self.beta < 0:
            raise ExplorationError(ErrorKind.CONFIG_INVALID, "beta: must be a finite number >= 0, got %s." % self.beta)

    def bonus(self, count: int) -> float:
        if count < 1:
            # counts are updated for the whole batch before any bonus is computed, so this is an ordering bug
            raise ExplorationError(ErrorKind.ZERO_COUNT, "The bonus of a state that was never counted was requested.")
        return self.beta / math.sqrt(count)

    def make_key(self, code: BinaryCode | Any, action: int | None = None) -> CountKey:
        if self.count_mode == CountMode.STATE_ACTION:
            if action is None:
                raise ExplorationError(ErrorKind.MISSING_ACTION, "State-action counting needs the action id.")
            return CountKey.encode(code=code, action=action)
        return CountKey.encode(code=code, action=None)

    def return_bound(self, gamma: float, horizon: int) -> float:
        """
        The largest discounted return bonuses alone can give: beta at every step, since every count is >= 1.
        :param gamma: A float in [0, 1] being the discount factor.
        :param horizon: An integer being the episode length, bounding the sum when gamma = 1.
        :return: A float being beta / (1 - gamma), or beta * horizon when gamma = 1.
        """
        if gamma < 1:
            return self.beta / (1.0 - gamma)
        return self.beta * horizon
