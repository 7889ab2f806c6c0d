import numpy as np

from envs.EnvSpec import EnvSpec
from envs.Environment import Environment
from utils.EnvKind import EnvKind
from utils.ErrorKind import ErrorKind
from utils.ExplorationError import ExplorationError

LEFT = 0
RIGHT = 1


class ChainMDP(Environment):
    """
    A chain of n states: start at 0, RIGHT moves to the next state, LEFT to the previous one (floored at 0).
    Reaching state n-1 gives reward 1 and ends the episode. The horizon is 4n, the observation is one-hot.
    """

    def __init__(self, nb_states: int, seed: int | None = None):
        if nb_states < 3:
            raise ExplorationError(ErrorKind.INVALID_SIZE, "chain_states: a chain needs at least 3 states, got %s." % nb_states)
        super().__init__(spec=EnvSpec(observation_shape=(nb_states, ), nb_actions=2, horizon=4 * nb_states), seed=seed)
        self.nb_states = nb_states
        self.position = 0

    def reset_state(self) -> None:
        self.position = 0

    def transition(self, action: int) -> tuple[float, bool]:
        if action == RIGHT:
            self.position += 1
        else:
            self.position = max(self.position - 1, 0)
        if self.position == self.nb_states - 1:
            return 1.0, True
        return 0.0, False

    def observe(self) -> np.ndarray:
        observation = np.zeros(self.nb_states)
        observation[self.position] = 1.0
        return observation

    def get_kind(self) -> EnvKind:
        return EnvKind.CHAIN
