import numpy as np
import pytest

from agents.Agent import Agent
from agents.Rollout import Rollout
from envs.ChainMDP import ChainMDP, LEFT, RIGHT
from utils.ErrorKind import ErrorKind
from utils.ExplorationError import ExplorationError
from utils.utils import new_generator


class ConstantAgent(Agent):
    def __init__(self, action: int):
        self.action = action

    def act(self, observation: np.ndarray, rng: np.random.Generator) -> int:
        return self.action

    def update(self, trajectories) -> None:
        pass


class TestRollout:
    def test_run_episode(self):
        rollout = Rollout(env=ChainMDP(nb_states=4), agent=ConstantAgent(action=RIGHT))
        trajectory = rollout.run_episode(rng=new_generator(0))
        assert trajectory.get_nb_steps() == 3
        assert len(trajectory.observations) == 4
        assert trajectory.rewards == [0.0, 0.0, 1.0]
        assert trajectory.terminated
        assert trajectory.reached_goal()

    def test_truncated_episode(self):
        rollout = Rollout(env=ChainMDP(nb_states=4), agent=ConstantAgent(action=LEFT))
        trajectory = rollout.run_episode(rng=new_generator(0))
        assert trajectory.get_nb_steps() == 16
        assert not trajectory.terminated
        assert not trajectory.reached_goal()

    def test_collect_batch(self):
        rollout = Rollout(env=ChainMDP(nb_states=3), agent=ConstantAgent(action=RIGHT))
        trajectories = rollout.collect_batch(batch_size=5, rng=new_generator(0))
        # whole episodes of 2 steps until at least 5 steps
        assert len(trajectories) == 3
        assert [trajectory.episode_seed for trajectory in trajectories] == [0, 1, 2]
        assert all(trajectory.bonuses == [0.0, 0.0] for trajectory in trajectories)

    def test_episode_seeds_continue_across_batches(self):
        rollout = Rollout(env=ChainMDP(nb_states=3), agent=ConstantAgent(action=RIGHT))
        rollout.collect_batch(batch_size=1, rng=new_generator(0))
        trajectories = rollout.collect_batch(batch_size=1, rng=new_generator(0))
        assert trajectories[0].episode_seed == 1
        assert rollout.nb_episodes == 2

    def test_invalid_batch_size(self):
        rollout = Rollout(env=ChainMDP(nb_states=3), agent=ConstantAgent(action=RIGHT))
        with pytest.raises(ExplorationError) as error:
            rollout.collect_batch(batch_size=0, rng=new_generator(0))
        assert error.value.kind == ErrorKind.INVALID_SIZE
