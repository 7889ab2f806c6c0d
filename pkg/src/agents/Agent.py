import numpy as np

from agents.Trajectory import Trajectory
from utils.AgentKind import AgentKind


class Agent:
    """
    A learner acting in an environment with discrete actions, trained on batches of trajectories whose
    rewards are the environment rewards plus the exploration bonuses.
    """

    def act(self, observation: np.ndarray, rng: np.random.Generator) -> int:
        raise NotImplementedError("The method act() has to be overridden in every child class.")

    def update(self, trajectories: list[Trajectory]) -> None:
        raise NotImplementedError("The method update() has to be overridden in every child class.")

    def get_kind(self) -> AgentKind:
        raise NotImplementedError("The method get_kind() has to be overridden in every child class.")

    def get_state(self) -> dict:
        raise NotImplementedError("The method get_state() has to be overridden in every child class.")

    def set_state(self, state: dict) -> None:
        raise NotImplementedError("The method set_state() has to be overridden in every child class.")
