import numpy as np

from agents.Agent import Agent
from agents.SoftmaxPolicy import SoftmaxPolicy
from agents.Trajectory import Trajectory
from utils.AgentKind import AgentKind


class ReinforceAgent(Agent):
    """
    Vanilla REINFORCE on a linear softmax policy. Returns are discounted sums of (r + r+), the baseline is the
    mean return of the batch, and the policy-gradient estimate is averaged over the steps of the batch.
    """

    def __init__(self, policy: SoftmaxPolicy, gamma: float, learning_rate: float):
        self.policy = policy
        self.gamma = gamma
        self.learning_rate = learning_rate

    def act(self, observation: np.ndarray, rng: np.random.Generator) -> int:
        return self.policy.sample(observation=observation, rng=rng)

    def discounted_returns(self, trajectory: Trajectory) -> np.ndarray:
        training_rewards = trajectory.get_training_rewards()
        returns = np.zeros(len(training_rewards))
        running = 0.0
        for step in range(len(training_rewards) - 1, -1, -1):
            running = training_rewards[step] + self.gamma * running
            returns[step] = running
        return returns

    def advantages(self, trajectories: list[Trajectory]) -> list[np.ndarray]:
        returns = [self.discounted_returns(trajectory=trajectory) for trajectory in trajectories]
        baseline = float(np.mean(np.concatenate(returns)))
        return [trajectory_returns - baseline for trajectory_returns in returns]

    def surrogate(self, trajectories: list[Trajectory], advantages: list[np.ndarray] | None = None) -> float:
        """
        The objective whose gradient is the policy-gradient estimate: mean over steps of A_t log pi(a_t | s_t),
        the advantages being constants.
        """
        if advantages is None:
            advantages = self.advantages(trajectories=trajectories)
        total = 0.0
        nb_steps = 0
        for trajectory, trajectory_advantages in zip(trajectories, advantages):
            for step in range(trajectory.get_nb_steps()):
                total += trajectory_advantages[step] * self.policy.log_probability(observation=trajectory.observations[step],
                                                                                   action=trajectory.actions[step])
                nb_steps += 1
        return total / max(nb_steps, 1)

    def gradient(self, trajectories: list[Trajectory], advantages: list[np.ndarray] | None = None) -> list[np.ndarray]:
        if advantages is None:
            advantages = self.advantages(trajectories=trajectories)
        weight_gradient = np.zeros_like(self.policy.weights)
        bias_gradient = np.zeros_like(self.policy.biases)
        nb_steps = 0
        for trajectory, trajectory_advantages in zip(trajectories, advantages):
            for step in range(trajectory.get_nb_steps()):
                step_weight_gradient, step_bias_gradient = self.policy.log_probability_gradient(
                    observation=trajectory.observations[step], action=trajectory.actions[step])
                weight_gradient += trajectory_advantages[step] * step_weight_gradient
                bias_gradient += trajectory_advantages[step] * step_bias_gradient
                nb_steps += 1
        nb_steps = max(nb_steps, 1)
        return [weight_gradient / nb_steps, bias_gradient / nb_steps]

    def update(self, trajectories: list[Trajectory]) -> None:
        if self.learning_rate == 0 or sum(trajectory.get_nb_steps() for trajectory in trajectories) == 0:
            return
        for parameter, parameter_gradient in zip(self.policy.get_parameters(), self.gradient(trajectories=trajectories)):
            parameter += self.learning_rate * parameter_gradient  # ascent

    def get_state(self) -> dict:
        return {"weights": self.policy.weights, "biases": self.policy.biases}

    def set_state(self, state: dict) -> None:
        self.policy.weights = state["weights"]
        self.policy.biases = state["biases"]

    def get_kind(self) -> AgentKind:
        return AgentKind.REINFORCE
