import math

from agents.Experiment import Experiment
from agents.QLearningAgent import QLearningAgent
from agents.ReinforceAgent import ReinforceAgent
from autoencoder.LearnedHasher import LearnedHasher
from config.ExperimentConfig import ExperimentConfig
from counting.CountMinSketch import CountMinSketch
from counting.ExactCounter import ExactCounter
from hashing.BassHasher import BassHasher
from hashing.GridHasher import GridHasher
from hashing.SimHasher import SimHasher
from utils.utils import median_with_inf

CHAIN_TEXT = "chain_states = 6\nhash_k = 16\niterations = 5\nbatch_size = 20\n"

# acceptance-scale chain and two-room gridworld, at beta = 0.01 and k = 32
CHAIN_50_TEXT = "chain_states = 50\nhash_k = 32\nbeta = 0.01\nbatch_size = 200\niterations = 30\n"
GRIDWORLD_10_TEXT = "env = gridworld\ngrid_width = 10\ngrid_height = 10\nhash_k = 32\nbeta = 0.01\nbatch_size = 60\niterations = 40\n"
BASELINE_TEXT = "hasher = none\nq_state_key = exact\n"

# environments and agents on which a zero bonus must reproduce the baseline
ZERO_BETA_TEXTS = [
    ("chain_states = 8\niterations = 4\nbatch_size = 40\n", "q_state_key = exact\n"),
    ("env = gridworld\ngrid_width = 6\ngrid_height = 6\niterations = 4\nbatch_size = 40\n", "q_state_key = exact\n"),
    ("env = gridworld\ngrid_width = 6\ngrid_height = 6\nagent = reinforce\niterations = 4\nbatch_size = 40\n", ""),
    ("env = point_mass\nagent = reinforce\niterations = 2\nbatch_size = 20\n", "hasher = grid\n"),
]


def new_experiment(text: str, seed: int = 0) -> Experiment:
    return Experiment(config=ExperimentConfig.from_text(text=text), seed=seed)


def first_goal_iterations(text: str, seeds: list[int]) -> list[float]:
    iterations = []
    for seed in seeds:
        experiment = new_experiment(text=text, seed=seed)
        experiment.run()
        iterations.append(experiment.get_iterations_to_first_goal())
    return iterations


def comparable(rows) -> list[tuple]:
    # everything but the wall time
    return [(row.iteration, row.seed, row.mean_true_return, row.mean_bonus, row.distinct_keys, row.counter_bytes, row.ae_loss) for row in rows]


class TestExperiment:
    def test_build_simhash(self):
        experiment = new_experiment(text=CHAIN_TEXT)
        assert isinstance(experiment.hasher, SimHasher)
        assert experiment.hasher.matrix.shape == (16, 6)
        assert isinstance(experiment.counter, ExactCounter)
        assert isinstance(experiment.agent, QLearningAgent)
        assert experiment.pipeline.is_enabled()

    def test_build_count_min(self):
        experiment = new_experiment(text=CHAIN_TEXT + "counter = cms\ncms_primes = 6K\n")
        assert isinstance(experiment.counter, CountMinSketch)

    def test_build_baseline(self):
        experiment = new_experiment(text=CHAIN_TEXT + "hasher = none\nq_state_key = exact\n")
        assert experiment.hasher is None
        assert experiment.counter is None
        assert not experiment.pipeline.is_enabled()

    def test_build_bass(self):
        experiment = new_experiment(text="env = gridworld\nhasher = bass\nbass_cell_size = 2\nbass_simhash = true\nhash_k = 8\n")
        assert isinstance(experiment.hasher, BassHasher)
        assert experiment.hasher.simhasher.matrix.shape == (8, 25)

    def test_build_grid_broadcasts_sizes(self):
        experiment = new_experiment(text="env = point_mass\nhasher = grid\ngrid_sizes = 0.2\n")
        assert isinstance(experiment.hasher, GridHasher)
        assert experiment.hasher.grid_sizes.tolist() == [0.2, 0.2, 0.2, 0.2]

    def test_build_learned(self):
        experiment = new_experiment(text=CHAIN_TEXT + "hasher = learned\nq_state_key = exact\nae_hidden = 8\nae_code_dim = 4\n")
        assert isinstance(experiment.hasher, LearnedHasher)
        assert experiment.model.layer_sizes == [6, 8, 4, 8, 6]
        assert experiment.hasher.downsampler.matrix.shape == (16, 4)

    def test_build_reinforce(self):
        experiment = new_experiment(text=CHAIN_TEXT + "agent = reinforce\n")
        assert isinstance(experiment.agent, ReinforceAgent)
        assert experiment.agent.policy.weights.shape == (2, 6)

    def test_run(self):
        experiment = new_experiment(text=CHAIN_TEXT)
        rows = experiment.run()
        assert [row.iteration for row in rows] == list(range(5))
        assert all(row.seed == 0 for row in rows)
        assert all(row.mean_bonus > 0 for row in rows)
        assert all(row.ae_loss is None for row in rows)
        assert all(row.wall_ms >= 0 for row in rows)
        distinct_keys = [row.distinct_keys for row in rows]
        assert distinct_keys == sorted(distinct_keys)
        assert 0 < distinct_keys[-1] <= 6
        assert experiment.final_mean_return == rows[-1].mean_true_return

    def test_same_seed_same_rows(self):
        first = new_experiment(text=CHAIN_TEXT, seed=3).run()
        second = new_experiment(text=CHAIN_TEXT, seed=3).run()
        assert comparable(first) == comparable(second)

    def test_zero_beta_equals_baseline(self):
        # hashing never draws from the agent generator, so without bonus the runs coincide
        for env_text, hashing_text in ZERO_BETA_TEXTS:
            for seed in range(5):
                with_hashing = new_experiment(text=env_text + hashing_text + "beta = 0\n", seed=seed).run()
                baseline = new_experiment(text=env_text + BASELINE_TEXT, seed=seed).run()
                assert [row.mean_true_return for row in with_hashing] == [row.mean_true_return for row in baseline]
                assert all(row.mean_bonus == 0.0 for row in with_hashing)
                assert all(row.distinct_keys > 0 for row in with_hashing)
                assert all(row.distinct_keys == 0 and row.counter_bytes == 0 for row in baseline)

    def test_optimistic_start_only_with_bonus(self):
        assert new_experiment(text=CHAIN_TEXT + "beta = 0.01\n").agent.qtable.initial_value == 0.01 / (1.0 - 0.99)
        assert new_experiment(text=CHAIN_TEXT + "beta = 0.01\ngamma = 1\n").agent.qtable.initial_value == 0.01 * 24
        assert new_experiment(text=CHAIN_TEXT + "beta = 0\n").agent.qtable.initial_value == 0.0
        assert new_experiment(text=CHAIN_TEXT + BASELINE_TEXT).agent.qtable.initial_value == 0.0

    def test_every_env_builds_with_grid_defaults(self):
        for env_text in ["env = chain\n", "env = gridworld\n", "env = gridworld\ngrid_observation = vector\n", "env = point_mass\n"]:
            experiment = new_experiment(text=env_text + "hasher = grid\n")
            assert isinstance(experiment.hasher, GridHasher)
            assert experiment.hasher.grid_sizes.tolist() == [0.1] * experiment.spec.get_observation_dim()

    def test_bonus_reaches_chain_goal_before_baseline(self):
        seeds = [0, 1, 2]
        with_bonus = median_with_inf(first_goal_iterations(text=CHAIN_50_TEXT, seeds=seeds))
        baseline = median_with_inf(first_goal_iterations(text=CHAIN_50_TEXT + BASELINE_TEXT, seeds=seeds))
        assert math.isfinite(with_bonus)
        assert with_bonus < baseline

    def test_state_action_counts_reach_chain_goal_before_baseline(self):
        seeds = [0, 1, 2]
        with_bonus = median_with_inf(first_goal_iterations(text=CHAIN_50_TEXT + "count_mode = state_action\n", seeds=seeds))
        baseline = median_with_inf(first_goal_iterations(text=CHAIN_50_TEXT + BASELINE_TEXT, seeds=seeds))
        assert math.isfinite(with_bonus)
        assert with_bonus < baseline

    def test_bonus_reaches_gridworld_goal_before_baseline(self):
        seeds = [0, 1, 2]
        with_bonus = median_with_inf(first_goal_iterations(text=GRIDWORLD_10_TEXT, seeds=seeds))
        baseline = median_with_inf(first_goal_iterations(text=GRIDWORLD_10_TEXT + BASELINE_TEXT, seeds=seeds))
        assert math.isfinite(with_bonus)
        assert with_bonus < baseline

    def test_iterations_to_first_goal(self):
        experiment = new_experiment(text=CHAIN_TEXT)
        rows = experiment.run()
        expected = next((row.iteration + 1.0 for row in rows if row.mean_true_return > 0), math.inf)
        assert experiment.get_iterations_to_first_goal() == expected

    def test_learned_hashing(self):
        experiment = new_experiment(text=CHAIN_TEXT + "hasher = learned\nq_state_key = exact\nae_hidden = 8\nae_code_dim = 4\n"
                                                      "ae_steps = 3\nae_batch_size = 8\nae_update_every = 2\n")
        rows = experiment.run()
        assert all(row.ae_loss is not None and row.ae_loss > 0 for row in rows)
        # retrained at iterations 0, 2 and 4 only
        assert rows[1].ae_loss == rows[0].ae_loss
        assert rows[3].ae_loss == rows[2].ae_loss
        assert len(experiment.replay_pool) > 0
        assert experiment.optimizer.nb_steps == 9

    def test_reinforce_on_gridworld(self):
        rows = new_experiment(text="env = gridworld\ngrid_width = 5\ngrid_height = 5\nagent = reinforce\nhash_k = 8\n"
                                   "iterations = 3\nbatch_size = 30\n").run()
        assert len(rows) == 3
        assert all(row.distinct_keys > 0 for row in rows)

    def test_point_mass_with_count_min(self):
        rows = new_experiment(text="env = point_mass\nhasher = grid\ngrid_sizes = 0.2\ncounter = cms\ncms_primes = 6K\n"
                                   "iterations = 2\nbatch_size = 10\n").run()
        assert all(row.counter_bytes == 8 * sum((967, 971, 977, 983, 991, 997)) for row in rows)
