from dataclasses import dataclass

from utils.ErrorKind import ErrorKind
from utils.ExplorationError import ExplorationError


@dataclass(frozen=True)
class EnvSpec:
    """
    The static description of an environment: observation shape, number of discrete actions, horizon T,
    and the largest observation value (used to normalize observations to [0, 1] for the autoencoder).
    """
    observation_shape: tuple[int, ...]
    nb_actions: int
    horizon: int
    observation_scale: float = 1.0

    def __post_init__(self):
        if self.horizon < 1:
            raise ExplorationError(ErrorKind.INVALID_SIZE, "The horizon must be >= 1, got %s." % self.horizon)
        if self.nb_actions < 2:
            raise ExplorationError(ErrorKind.INVALID_SIZE, "An environment needs at least 2 actions, got %s." % self.nb_actions)

    def get_observation_dim(self) -> int:
        dim = 1
        for size in self.observation_shape:
            dim *= size
        return dim
