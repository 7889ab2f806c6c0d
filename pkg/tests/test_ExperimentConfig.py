import os
from argparse import Namespace

import pytest

from config.ExperimentConfig import ExperimentConfig
from utils.AgentKind import AgentKind
from utils.CounterBackend import CounterBackend
from utils.CountMode import CountMode
from utils.EnvKind import EnvKind
from utils.ErrorKind import ErrorKind
from utils.ExplorationError import ExplorationError
from utils.HasherKind import HasherKind
from utils.constants import PRIMES_6M, PRIMES_6K, RUN_INFO_FILENAME


def assert_invalid(text: str, key: str) -> None:
    with pytest.raises(ExplorationError) as error:
        ExperimentConfig.from_text(text=text)
    assert error.value.kind == ErrorKind.CONFIG_INVALID
    assert error.value.message.startswith(key + ":")


class TestExperimentConfig:
    def test_defaults(self):
        config = ExperimentConfig()
        config.validate()
        assert config.get_env() == EnvKind.CHAIN
        assert config.get_hasher() == HasherKind.SIMHASH
        assert config.get_counter() == CounterBackend.EXACT
        assert config.get_cms_primes() == PRIMES_6M
        assert config.get_seeds() == [0]
        assert config.get_ae_hidden() == [64]

    def test_from_text(self):
        config = ExperimentConfig.from_text(text="# a comment\nenv = gridworld\nhasher = bass\nbeta = 0.05\nseeds = 1,2,3\n")
        assert config.get_env() == EnvKind.GRIDWORLD
        assert config.get_hasher() == HasherKind.BASS
        assert config.get_beta() == 0.05
        assert config.get_seeds() == [1, 2, 3]
        assert config.get_chain_states() == 50

    def test_unknown_key(self):
        assert_invalid(text="betta = 0.1\n", key="betta")

    def test_duplicate_key(self):
        assert_invalid(text="beta = 0.1\nbeta = 0.2\n", key="beta")

    def test_bad_values(self):
        assert_invalid(text="beta = -1\n", key="beta")
        assert_invalid(text="beta = abc\n", key="beta")
        assert_invalid(text="hash_k = 0\n", key="hash_k")
        assert_invalid(text="env = maze\n", key="env")
        assert_invalid(text="ae_noise = 0.25\n", key="ae_noise")
        assert_invalid(text="seeds = 1,1\n", key="seeds")
        assert_invalid(text="seeds = -1\n", key="seeds")
        assert_invalid(text="epsilon = 1.5\n", key="epsilon")
        assert_invalid(text="cms_primes = 10,11\n", key="cms_primes")
        assert_invalid(text="bass_simhash = maybe\n", key="bass_simhash")
        assert_invalid(text="goal_radius = 0.5\n", key="goal_radius")

    def test_sections_are_not_allowed(self):
        with pytest.raises(ExplorationError) as error:
            ExperimentConfig.from_text(text="beta = 0.1\n[other]\nhash_k = 4\n")
        assert error.value.kind == ErrorKind.CONFIG_INVALID

    def test_cross_rules(self):
        assert_invalid(text="hasher = none\n", key="q_state_key")
        assert_invalid(text="hasher = bass\n", key="hasher")
        assert_invalid(text="env = gridworld\nhasher = bass\nbass_cell_size = 3\n", key="bass_cell_size")
        assert_invalid(text="hasher = learned\nq_state_key = exact\nenv = point_mass\n", key="hasher")
        assert_invalid(text="hasher = learned\n", key="q_state_key")
        assert_invalid(text="env = point_mass\nhasher = grid\ngrid_sizes = 0.1,0.1\n", key="grid_sizes")

    def test_valid_combinations(self):
        ExperimentConfig.from_text(text="hasher = none\nq_state_key = exact\n")
        ExperimentConfig.from_text(text="hasher = learned\nagent = reinforce\n")
        ExperimentConfig.from_text(text="env = point_mass\nhasher = grid\ngrid_sizes = 0.1,0.1,0.05,0.05\n")
        ExperimentConfig.from_text(text="env = point_mass\nhasher = grid\ngrid_sizes = 0.1\n")

    def test_cms_primes(self):
        assert ExperimentConfig.from_text(text="cms_primes = 6K\n").get_cms_primes() == PRIMES_6K
        assert ExperimentConfig.from_text(text="cms_primes = 7,11,13\n").get_cms_primes() == (7, 11, 13)

    def test_enums(self):
        config = ExperimentConfig.from_text(text="count_mode = state_action\nagent = reinforce\ncounter = cms\n")
        assert config.get_count_mode() == CountMode.STATE_ACTION
        assert config.get_agent() == AgentKind.REINFORCE
        assert config.get_counter() == CounterBackend.COUNT_MIN

    def test_set_value(self):
        config = ExperimentConfig()
        config.set_value(key=ExperimentConfig.BETA_KEY, value=0.1)
        config.set_value(key=ExperimentConfig.HASHER_KEY, value=HasherKind.GRID)
        config.set_value(key=ExperimentConfig.SEEDS_KEY, value=[4, 5])
        assert config.get_beta() == 0.1
        assert config.get_hasher() == HasherKind.GRID
        assert config.get_seeds() == [4, 5]
        with pytest.raises(ExplorationError):
            config.set_value(key="unknown", value=1)

    def test_set_from_parameters(self):
        config = ExperimentConfig.from_text(text="seeds = 1,2\n")
        config.set_from_parameters(args=Namespace(seed=7, out_dir="elsewhere"))
        assert config.get_seeds() == [7]
        assert config.get_output_dir() == "elsewhere"
        config.set_from_parameters(args=Namespace(seed=None, out_dir=None))
        assert config.get_seeds() == [7]

    def test_text_round_trip(self):
        config = ExperimentConfig.from_text(text="env = gridworld\ngrid_observation = vector\nhasher = grid\nbeta = 0.3\n")
        assert ExperimentConfig.from_text(text=config.to_text()) == config
        assert config.to_text().splitlines()[0] == "name = experiment"

    def test_copy(self):
        config = ExperimentConfig.from_text(text="beta = 0.3\n")
        duplicate = config.copy()
        duplicate.set_value(key=ExperimentConfig.BETA_KEY, value=0.5)
        assert config.get_beta() == 0.3
        assert duplicate.get_beta() == 0.5

    def test_to_json(self):
        values = ExperimentConfig().to_json()
        assert list(values) == list(ExperimentConfig.DEFAULTS)
        assert values["env"] == "chain"
        assert values["bass_simhash"] is False
        assert values["cms_primes"] == PRIMES_6M

    def test_observation_dim(self):
        assert ExperimentConfig.from_text(text="chain_states = 7\n").get_observation_dim() == 7
        assert ExperimentConfig.from_text(text="env = gridworld\ngrid_width = 4\ngrid_height = 6\n").get_observation_dim() == 24
        assert ExperimentConfig.from_text(text="env = gridworld\ngrid_observation = vector\n").get_observation_dim() == 2
        assert ExperimentConfig.from_text(text="env = point_mass\n").get_observation_dim() == 4

    def test_from_file(self, tmp_path):
        filepath = os.path.join(tmp_path, "experiment.cfg")
        ExperimentConfig.from_text(text="beta = 0.2\n").write_to_file(filepath=filepath)
        assert ExperimentConfig.from_file(filepath=filepath).get_beta() == 0.2
        with pytest.raises(ExplorationError) as error:
            ExperimentConfig.from_file(filepath=os.path.join(tmp_path, "missing.cfg"))
        assert error.value.kind == ErrorKind.CONFIG_INVALID

    def test_run_info(self, tmp_path):
        filepath = ExperimentConfig.from_text(text="beta = 0.2\n").write_run_info(directory=str(tmp_path))
        assert os.path.basename(filepath) == RUN_INFO_FILENAME
        run_info = ExperimentConfig.new_parser()
        run_info.read(filepath)
        assert run_info.sections() == [ExperimentConfig.SYSTEM_SECTION, ExperimentConfig.EXPERIMENT_SECTION]
        assert run_info.get(ExperimentConfig.EXPERIMENT_SECTION, "beta") == "0.2"
        assert run_info.has_option(ExperimentConfig.SYSTEM_SECTION, ExperimentConfig.NUMPY_VERSION_KEY)

    def test_shipped_configs(self):
        configs_dir = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "configs")
        filenames = sorted(filename for filename in os.listdir(configs_dir) if filename.endswith(".cfg"))
        assert len(filenames) > 0
        for filename in filenames:
            config = ExperimentConfig.from_file(filepath=os.path.join(configs_dir, filename))
            assert config.get_name() == filename[:-len(".cfg")]
            assert config.get_beta() == 0.01
            assert config.get_reference_k() == 32
            if config.get_hasher() in (HasherKind.SIMHASH, HasherKind.LEARNED):
                assert config.get_hash_k() == 32
