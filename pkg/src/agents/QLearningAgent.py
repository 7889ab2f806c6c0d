from typing import Callable

import numpy as np

from agents.Agent import Agent
from agents.QTable import QTable
from agents.Trajectory import Trajectory
from utils.AgentKind import AgentKind


class QLearningAgent(Agent):
    """
    Tabular Q-learning with an epsilon-greedy behaviour policy (ties between greedy actions broken at random).
    States are looked up through a key function: the hash code of the observation or its exact bytes.
    Unvisited pairs read as initial_value, the largest return the bonus can give when bonuses are on.
    """

    def __init__(self, nb_actions: int, state_key: Callable[[np.ndarray], bytes], alpha: float, gamma: float, epsilon: float,
                 initial_value: float = 0.0):
        self.nb_actions = nb_actions
        self.state_key = state_key
        self.alpha = alpha
        self.gamma = gamma
        self.epsilon = epsilon
        self.qtable = QTable(nb_actions=nb_actions, initial_value=initial_value)

    def act(self, observation: np.ndarray, rng: np.random.Generator) -> int:
        if rng.random() < self.epsilon:
            return int(rng.integers(self.nb_actions))
        values = self.qtable.get_values(state_key=self.state_key(observation))
        greedy_actions = np.flatnonzero(values == values.max())
        if len(greedy_actions) == 1:
            return int(greedy_actions[0])
        return int(rng.choice(greedy_actions))

    def update(self, trajectories: list[Trajectory]) -> None:
        """
        One-step Q-learning on the (r + r+) rewards:
        Q(s, a) += alpha [(r + r+) + gamma max_a' Q(s', a') - Q(s, a)], with a next value of 0 after a terminal step.
        Steps are swept from the end of each episode so that a reward propagates back within one update.
        A step that ended the episode because of the horizon still bootstraps on its next state.
        """
        for trajectory in trajectories:
            keys = [self.state_key(observation) for observation in trajectory.observations]
            training_rewards = trajectory.get_training_rewards()
            last_step = trajectory.get_nb_steps() - 1
            for step in range(last_step, -1, -1):
                action = trajectory.actions[step]
                if step == last_step and trajectory.terminated:
                    next_value = 0.0
                else:
                    next_value = self.qtable.max_value(state_key=keys[step + 1])
                current = self.qtable.get(state_key=keys[step], action=action)
                target = training_rewards[step] + self.gamma * next_value
                self.qtable.set(state_key=keys[step], action=action, value=current + self.alpha * (target - current))

    def get_state(self) -> dict:
        return {"qtable": self.qtable.values}

    def set_state(self, state: dict) -> None:
        self.qtable.values = state["qtable"]

    def get_kind(self) -> AgentKind:
        return AgentKind.Q_LEARNING
