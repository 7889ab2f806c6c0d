from dataclasses import dataclass, field

import numpy as np


@dataclass
class Trajectory:
    """
    One episode: observations s_0 ... s_T (the last one is the state reached by the last action), actions,
    true rewards and exploration bonuses, one per step. The bonus of step t is the bonus of the state s_t
    in which the action a_t was taken.
    """
    observations: list[np.ndarray] = field(default_factory=list)
    actions: list[int] = field(default_factory=list)
    rewards: list[float] = field(default_factory=list)
    bonuses: list[float] = field(default_factory=list)
    terminated: bool = False  # the episode ended in a terminal state (and not because of the horizon)
    episode_seed: int = 0

    def add_step(self, action: int, reward: float, next_observation: np.ndarray) -> None:
        self.actions.append(action)
        self.rewards.append(reward)
        self.bonuses.append(0.0)
        self.observations.append(next_observation)

    def get_nb_steps(self) -> int:
        return len(self.actions)

    def get_visited_observations(self) -> list[np.ndarray]:
        # the states in which an action was taken
        return self.observations[:-1]

    def get_return_true(self) -> float:
        return float(sum(self.rewards))

    def get_return_train(self) -> float:
        return float(sum(reward + bonus for reward, bonus in zip(self.rewards, self.bonuses)))

    def get_training_rewards(self) -> list[float]:
        return [reward + bonus for reward, bonus in zip(self.rewards, self.bonuses)]

    def reached_goal(self) -> bool:
        return self.get_return_true() > 0
