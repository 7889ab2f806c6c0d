import numpy as np

from agents.Agent import Agent
from agents.Trajectory import Trajectory
from envs.Environment import Environment
from utils.ErrorKind import ErrorKind
from utils.ExplorationError import ExplorationError


class Rollout:
    """
    Collect whole episodes with the current policy. Episodes are numbered across batches: the i-th episode of
    a run is reset with episode seed i.
    """

    def __init__(self, env: Environment, agent: Agent):
        self.env = env
        self.agent = agent
        self.nb_episodes = 0

    def run_episode(self, rng: np.random.Generator) -> Trajectory:
        trajectory = Trajectory(episode_seed=self.nb_episodes)
        trajectory.observations.append(self.env.reset(episode_seed=self.nb_episodes))
        self.nb_episodes += 1
        done = False
        while not done:
            action = self.agent.act(observation=trajectory.observations[-1], rng=rng)
            result = self.env.step(action=action)
            trajectory.add_step(action=action, reward=result.reward, next_observation=result.observation)
            done = result.done
            trajectory.terminated = result.is_terminal()
        return trajectory

    def collect_batch(self, batch_size: int, rng: np.random.Generator) -> list[Trajectory]:
        """
        Collect complete episodes until at least batch_size environment steps are gathered.
        :param batch_size: An integer >= 1 being the minimal number of steps.
        :param rng: The generator used by the agent to pick actions.
        :return: A list of trajectories with zero bonuses.
        """
        if batch_size < 1:
            raise ExplorationError(ErrorKind.INVALID_SIZE, "batch_size: must be >= 1, got %s." % batch_size)
        trajectories = []
        nb_steps = 0
        while nb_steps < batch_size:
            trajectory = self.run_episode(rng=rng)
            trajectories.append(trajectory)
            nb_steps += trajectory.get_nb_steps()
        return trajectories
