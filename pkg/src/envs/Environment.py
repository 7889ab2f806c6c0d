import numpy as np

from envs.EnvSpec import EnvSpec
from envs.StepResult import StepResult
from utils.EnvKind import EnvKind
from utils.ErrorKind import ErrorKind
from utils.ExplorationError import ExplorationError


class Environment:
    """
    An episodic environment with discrete actions and deterministic dynamics.
    Child classes implement the state reset, the transition and the observation; this class enforces the
    episodic contract: step only after reset, never after done, actions in [0, nb_actions), horizon T.
    """

    def __init__(self, spec: EnvSpec, seed: int | None):
        self.spec = spec
        self.seed = 0 if seed is None else seed
        self.episode_seed = None
        self.nb_steps = 0
        self.started = False
        self.done = False

    def reset(self, episode_seed: int = 0) -> np.ndarray:
        """
        Start a new episode.
        :param episode_seed: An integer identifying the episode. Dynamics being deterministic, trajectories
        only depend on (construction seed, episode seed, actions).
        :return: A numpy array being the first observation.
        """
        self.episode_seed = episode_seed
        self.nb_steps = 0
        self.started = True
        self.done = False
        self.reset_state()
        return self.observe()

    def step(self, action: int) -> StepResult:
        if not self.started:
            raise ExplorationError(ErrorKind.STEP_BEFORE_RESET, "step() was called before reset().")
        if self.done:
            raise ExplorationError(ErrorKind.STEP_AFTER_DONE, "step() was called on a finished episode; call reset() first.")
        if isinstance(action, bool) or not isinstance(action, (int, np.integer)) or not 0 <= action < self.spec.nb_actions:
            raise ExplorationError(ErrorKind.INVALID_ACTION,
                                   "Actions are integers in [0, %s), got %s." % (self.spec.nb_actions, action))
        reward, terminated = self.transition(action=int(action))
        self.nb_steps += 1
        truncated = not terminated and self.nb_steps >= self.spec.horizon
        self.done = terminated or truncated
        return StepResult(observation=self.observe(), reward=float(reward), done=self.done, truncated=truncated)

    def get_spec(self) -> EnvSpec:
        return self.spec

    def reset_state(self) -> None:
        raise NotImplementedError("The method reset_state() has to be overridden in every child class.")

    def transition(self, action: int) -> tuple[float, bool]:
        raise NotImplementedError("The method transition() has to be overridden in every child class.")

    def observe(self) -> np.ndarray:
        raise NotImplementedError("The method observe() has to be overridden in every child class.")

    def get_kind(self) -> EnvKind:
        raise NotImplementedError("The method get_kind() has to be overridden in every child class.")
