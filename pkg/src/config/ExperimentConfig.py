import configparser
import getpass
import math
import os
import platform
from argparse import Namespace
from datetime import datetime
from enum import Enum
from typing import Any

import numpy as np
import pandas as pd

from counting.CountMinSketch import CountMinSketch
from utils.AgentKind import AgentKind
from utils.CountMode import CountMode
from utils.CounterBackend import CounterBackend
from utils.EnvKind import EnvKind
from utils.ErrorKind import ErrorKind
from utils.ExplorationError import ExplorationError
from utils.HasherKind import HasherKind
from utils.ObservationKind import ObservationKind
from utils.PrimeSet import PrimeSet
from utils.QStateKey import QStateKey
from utils.constants import DEFAULT_CONFIG_SECTION, RUN_INFO_FILENAME, MIN_NOISE_AMPLITUDE
from utils.setup_logger import log
from utils.utils import parse_bool, parse_int_list, parse_float_list, format_value, is_not_empty


class ExperimentConfig:
    """
    The parameters of an experiment, read from a flat "key = value" text file (one key per line, # comments).
    Unknown keys are rejected and every key, as well as every combination of keys, is checked by validate()
    before anything runs.
    """
    SYSTEM_SECTION = "SYSTEM"
    EXPERIMENT_SECTION = "EXPERIMENT"

    # experiment
    NAME_KEY = "name"
    # environment
    ENV_KEY = "env"
    CHAIN_STATES_KEY = "chain_states"
    GRID_WIDTH_KEY = "grid_width"
    GRID_HEIGHT_KEY = "grid_height"
    GRID_OBSERVATION_KEY = "grid_observation"
    GOAL_RADIUS_KEY = "goal_radius"
    # hashing
    HASHER_KEY = "hasher"
    HASH_K_KEY = "hash_k"
    BASS_CELL_SIZE_KEY = "bass_cell_size"
    BASS_BINS_KEY = "bass_bins"
    BASS_SIMHASH_KEY = "bass_simhash"
    GRID_SIZES_KEY = "grid_sizes"
    # autoencoder
    AE_HIDDEN_KEY = "ae_hidden"
    AE_CODE_DIM_KEY = "ae_code_dim"
    AE_NOISE_KEY = "ae_noise"
    AE_LAMBDA_KEY = "ae_lambda"
    AE_UPDATE_EVERY_KEY = "ae_update_every"
    AE_STEPS_KEY = "ae_steps"
    AE_BATCH_SIZE_KEY = "ae_batch_size"
    AE_LEARNING_RATE_KEY = "ae_learning_rate"
    REPLAY_CAPACITY_KEY = "replay_capacity"
    # counting
    COUNTER_KEY = "counter"
    CMS_PRIMES_KEY = "cms_primes"
    BETA_KEY = "beta"
    COUNT_MODE_KEY = "count_mode"
    # agent
    AGENT_KEY = "agent"
    Q_STATE_KEY_KEY = "q_state_key"
    ALPHA_KEY = "alpha"
    GAMMA_KEY = "gamma"
    EPSILON_KEY = "epsilon"
    LEARNING_RATE_KEY = "learning_rate"
    BATCH_SIZE_KEY = "batch_size"
    # run
    ITERATIONS_KEY = "iterations"
    SEEDS_KEY = "seeds"
    MASTER_SEED_KEY = "master_seed"
    REFERENCE_K_KEY = "reference_k"
    OUTPUT_DIR_KEY = "output_dir"
    # SYSTEM section of the run information
    PYTHON_VERSION_KEY = "python_version"
    NUMPY_VERSION_KEY = "numpy_version"
    PANDAS_VERSION_KEY = "pandas_version"
    EXECUTION_KEY = "execution_date"
    PLATFORM_KEY = "platform"
    USER_KEY = "user"

    # keys in their canonical order, with their default values
    DEFAULTS = {
        NAME_KEY: "experiment",
        ENV_KEY: EnvKind.CHAIN.value,
        CHAIN_STATES_KEY: "50",
        GRID_WIDTH_KEY: "10",
        GRID_HEIGHT_KEY: "10",
        GRID_OBSERVATION_KEY: ObservationKind.IMAGE.value,
        GOAL_RADIUS_KEY: "0.1",
        HASHER_KEY: HasherKind.SIMHASH.value,
        HASH_K_KEY: "32",
        BASS_CELL_SIZE_KEY: "1",
        BASS_BINS_KEY: "20",
        BASS_SIMHASH_KEY: "false",
        GRID_SIZES_KEY: "0.1",
        AE_HIDDEN_KEY: "64",
        AE_CODE_DIM_KEY: "64",
        AE_NOISE_KEY: "0.3",
        AE_LAMBDA_KEY: "10.0",
        AE_UPDATE_EVERY_KEY: "3",
        AE_STEPS_KEY: "50",
        AE_BATCH_SIZE_KEY: "32",
        AE_LEARNING_RATE_KEY: "0.001",
        REPLAY_CAPACITY_KEY: "5000",
        COUNTER_KEY: CounterBackend.EXACT.value,
        CMS_PRIMES_KEY: PrimeSet.SIX_M.value,
        BETA_KEY: "0.01",
        COUNT_MODE_KEY: CountMode.STATE.value,
        AGENT_KEY: AgentKind.Q_LEARNING.value,
        Q_STATE_KEY_KEY: QStateKey.HASH.value,
        ALPHA_KEY: "0.5",
        GAMMA_KEY: "0.99",
        EPSILON_KEY: "0.1",
        LEARNING_RATE_KEY: "0.05",
        BATCH_SIZE_KEY: "1",
        ITERATIONS_KEY: "100",
        SEEDS_KEY: "0",
        MASTER_SEED_KEY: "0",
        REFERENCE_K_KEY: "32",
        OUTPUT_DIR_KEY: "results",
    }

    def __init__(self):
        self.config = ExperimentConfig.new_parser()
        self.config.add_section(DEFAULT_CONFIG_SECTION)
        for key, value in ExperimentConfig.DEFAULTS.items():
            self.config.set(DEFAULT_CONFIG_SECTION, key, value)

    @staticmethod
    def new_parser() -> configparser.ConfigParser:
        parser = configparser.ConfigParser(interpolation=None, strict=True)
        parser.optionxform = str  # keys are case-sensitive
        return parser

    @classmethod
    def from_text(cls, text: str) -> "ExperimentConfig":
        """
        Parse the flat text format and validate it.
        :param text: A string with one "key = value" per line; lines starting with # are comments.
        :return: A validated ExperimentConfig, keys absent from the text keeping their default value.
        """
        parser = ExperimentConfig.new_parser()
        try:
            # the flat format has no section: a synthetic one lets configparser do the parsing
            parser.read_string("[" + DEFAULT_CONFIG_SECTION + "]\n" + text)
        except configparser.DuplicateOptionError as error:
            raise ExplorationError(ErrorKind.CONFIG_INVALID, "%s: the key is given twice." % error.option)
        except configparser.Error as error:
            raise ExplorationError(ErrorKind.CONFIG_INVALID, "The config could not be parsed: " + error.message)
        if len(parser.sections()) != 1:
            raise ExplorationError(ErrorKind.CONFIG_INVALID, "The config is a flat list of keys, sections are not allowed.")

        experiment_config = cls()
        for key, value in parser.items(DEFAULT_CONFIG_SECTION):
            experiment_config.set_value(key=key, value=value)
        experiment_config.validate()
        return experiment_config

    @classmethod
    def from_file(cls, filepath: str) -> "ExperimentConfig":
        if not os.path.isfile(filepath):
            raise ExplorationError(ErrorKind.CONFIG_INVALID, "The config file '%s' does not exist." % filepath)
        with open(filepath, "r", encoding="utf-8") as config_file:
            return cls.from_text(text=config_file.read())

    def set_value(self, key: str, value: Any) -> None:
        if key not in ExperimentConfig.DEFAULTS:
            raise ExplorationError(ErrorKind.CONFIG_INVALID, "%s: unknown key." % key)
        text = value.value if isinstance(value, Enum) else format_value(value)
        self.config.set(DEFAULT_CONFIG_SECTION, key, text.strip())

    def set_from_parameters(self, args: Namespace) -> None:
        # command-line parameters override the file values
        if getattr(args, "seed", None) is not None:
            self.set_value(key=ExperimentConfig.SEEDS_KEY, value=[args.seed])
        if is_not_empty(getattr(args, "out_dir", None)):
            self.set_value(key=ExperimentConfig.OUTPUT_DIR_KEY, value=args.out_dir)
        self.validate()
        log.debug(self.to_json())

    def copy(self) -> "ExperimentConfig":
        duplicate = ExperimentConfig()
        for key in ExperimentConfig.DEFAULTS:
            duplicate.config.set(DEFAULT_CONFIG_SECTION, key, self.get_text(key=key))
        return duplicate

    # typed access, every parsing error names the key

    def get_text(self, key: str) -> str:
        return self.config.get(DEFAULT_CONFIG_SECTION, key)

    def parse(self, key: str, parser) -> Any:
        text = self.get_text(key=key)
        try:
            return parser(text)
        except (ValueError, TypeError):
            raise ExplorationError(ErrorKind.CONFIG_INVALID, "%s: '%s' is not a valid value." % (key, text))

    def get_int(self, key: str) -> int:
        return self.parse(key=key, parser=int)

    def get_float(self, key: str) -> float:
        return self.parse(key=key, parser=float)

    def get_enum(self, key: str, enum_class: type[Enum]) -> Any:
        text = self.get_text(key=key)
        try:
            return enum_class(text)
        except ValueError:
            raise ExplorationError(ErrorKind.CONFIG_INVALID, "%s: '%s' is not one of %s." % (key, text, [member.value for member in enum_class]))

    def get_name(self) -> str:
        return self.get_text(key=ExperimentConfig.NAME_KEY)

    def get_env(self) -> EnvKind:
        return self.get_enum(key=ExperimentConfig.ENV_KEY, enum_class=EnvKind)

    def get_chain_states(self) -> int:
        return self.get_int(key=ExperimentConfig.CHAIN_STATES_KEY)

    def get_grid_width(self) -> int:
        return self.get_int(key=ExperimentConfig.GRID_WIDTH_KEY)

    def get_grid_height(self) -> int:
        return self.get_int(key=ExperimentConfig.GRID_HEIGHT_KEY)

    def get_grid_observation(self) -> ObservationKind:
        return self.get_enum(key=ExperimentConfig.GRID_OBSERVATION_KEY, enum_class=ObservationKind)

    def get_goal_radius(self) -> float:
        return self.get_float(key=ExperimentConfig.GOAL_RADIUS_KEY)

    def get_hasher(self) -> HasherKind:
        return self.get_enum(key=ExperimentConfig.HASHER_KEY, enum_class=HasherKind)

    def get_hash_k(self) -> int:
        return self.get_int(key=ExperimentConfig.HASH_K_KEY)

    def get_bass_cell_size(self) -> int:
        return self.get_int(key=ExperimentConfig.BASS_CELL_SIZE_KEY)

    def get_bass_bins(self) -> int:
        return self.get_int(key=ExperimentConfig.BASS_BINS_KEY)

    def get_bass_simhash(self) -> bool:
        return self.parse(key=ExperimentConfig.BASS_SIMHASH_KEY, parser=parse_bool)

    def get_grid_sizes(self) -> list[float]:
        return self.parse(key=ExperimentConfig.GRID_SIZES_KEY, parser=parse_float_list)

    def get_ae_hidden(self) -> list[int]:
        return self.parse(key=ExperimentConfig.AE_HIDDEN_KEY, parser=parse_int_list)

    def get_ae_code_dim(self) -> int:
        return self.get_int(key=ExperimentConfig.AE_CODE_DIM_KEY)

    def get_ae_noise(self) -> float:
        return self.get_float(key=ExperimentConfig.AE_NOISE_KEY)

    def get_ae_lambda(self) -> float:
        return self.get_float(key=ExperimentConfig.AE_LAMBDA_KEY)

    def get_ae_update_every(self) -> int:
        return self.get_int(key=ExperimentConfig.AE_UPDATE_EVERY_KEY)

    def get_ae_steps(self) -> int:
        return self.get_int(key=ExperimentConfig.AE_STEPS_KEY)

    def get_ae_batch_size(self) -> int:
        return self.get_int(key=ExperimentConfig.AE_BATCH_SIZE_KEY)

    def get_ae_learning_rate(self) -> float:
        return self.get_float(key=ExperimentConfig.AE_LEARNING_RATE_KEY)

    def get_replay_capacity(self) -> int:
        return self.get_int(key=ExperimentConfig.REPLAY_CAPACITY_KEY)

    def get_counter(self) -> CounterBackend:
        return self.get_enum(key=ExperimentConfig.COUNTER_KEY, enum_class=CounterBackend)

    def get_cms_primes(self) -> tuple[int, ...]:
        text = self.get_text(key=ExperimentConfig.CMS_PRIMES_KEY)
        if text in [prime_set.value for prime_set in PrimeSet]:
            return CountMinSketch.primes_of(prime_set=PrimeSet(text))
        primes = tuple(self.parse(key=ExperimentConfig.CMS_PRIMES_KEY, parser=parse_int_list))
        try:
            CountMinSketch.check_primes(primes=primes)
        except ExplorationError as error:
            raise ExplorationError(ErrorKind.CONFIG_INVALID, "%s: %s" % (ExperimentConfig.CMS_PRIMES_KEY, error.message))
        return primes

    def get_beta(self) -> float:
        return self.get_float(key=ExperimentConfig.BETA_KEY)

    def get_count_mode(self) -> CountMode:
        return self.get_enum(key=ExperimentConfig.COUNT_MODE_KEY, enum_class=CountMode)

    def get_agent(self) -> AgentKind:
        return self.get_enum(key=ExperimentConfig.AGENT_KEY, enum_class=AgentKind)

    def get_q_state_key(self) -> QStateKey:
        return self.get_enum(key=ExperimentConfig.Q_STATE_KEY_KEY, enum_class=QStateKey)

    def get_alpha(self) -> float:
        return self.get_float(key=ExperimentConfig.ALPHA_KEY)

    def get_gamma(self) -> float:
        return self.get_float(key=ExperimentConfig.GAMMA_KEY)

    def get_epsilon(self) -> float:
        return self.get_float(key=ExperimentConfig.EPSILON_KEY)

    def get_learning_rate(self) -> float:
        return self.get_float(key=ExperimentConfig.LEARNING_RATE_KEY)

    def get_batch_size(self) -> int:
        return self.get_int(key=ExperimentConfig.BATCH_SIZE_KEY)

    def get_iterations(self) -> int:
        return self.get_int(key=ExperimentConfig.ITERATIONS_KEY)

    def get_seeds(self) -> list[int]:
        return self.parse(key=ExperimentConfig.SEEDS_KEY, parser=parse_int_list)

    def get_master_seed(self) -> int:
        return self.get_int(key=ExperimentConfig.MASTER_SEED_KEY)

    def get_reference_k(self) -> int:
        return self.get_int(key=ExperimentConfig.REFERENCE_K_KEY)

    def get_output_dir(self) -> str:
        return self.get_text(key=ExperimentConfig.OUTPUT_DIR_KEY)

    def get_observation_dim(self) -> int:
        env_kind = self.get_env()
        if env_kind == EnvKind.CHAIN:
            return self.get_chain_states()
        elif env_kind == EnvKind.GRIDWORLD:
            if self.get_grid_observation() == ObservationKind.IMAGE:
                return self.get_grid_width() * self.get_grid_height()
            return 2
        else:
            return 4

    # VALIDATION

    @staticmethod
    def check(condition: bool, key: str, message: str) -> None:
        if not condition:
            raise ExplorationError(ErrorKind.CONFIG_INVALID, key + ": " + message)

    def validate(self) -> None:
        """
        Check every key and every cross-key rule.
        Raise an ExplorationError of kind CONFIG_INVALID naming the first offending key.
        """
        check = ExperimentConfig.check
        name = self.get_name()
        check(is_not_empty(name) and os.sep not in name and name not in (".", ".."), ExperimentConfig.NAME_KEY,
              "must be a non-empty directory name, got '%s'." % name)

        env_kind = self.get_env()
        check(self.get_chain_states() >= 3, ExperimentConfig.CHAIN_STATES_KEY, "must be >= 3, got %s." % self.get_chain_states())
        check(self.get_grid_width() >= 3, ExperimentConfig.GRID_WIDTH_KEY, "must be >= 3, got %s." % self.get_grid_width())
        check(self.get_grid_height() >= 3, ExperimentConfig.GRID_HEIGHT_KEY, "must be >= 3, got %s." % self.get_grid_height())
        observation_kind = self.get_grid_observation()
        check(0 < self.get_goal_radius() < 0.5, ExperimentConfig.GOAL_RADIUS_KEY, "must lie in (0, 0.5), got %s." % self.get_goal_radius())

        hasher_kind = self.get_hasher()
        check(self.get_hash_k() >= 1, ExperimentConfig.HASH_K_KEY, "must be >= 1, got %s." % self.get_hash_k())
        check(self.get_bass_cell_size() >= 1, ExperimentConfig.BASS_CELL_SIZE_KEY, "must be >= 1, got %s." % self.get_bass_cell_size())
        check(self.get_bass_bins() >= 1, ExperimentConfig.BASS_BINS_KEY, "must be >= 1, got %s." % self.get_bass_bins())
        self.get_bass_simhash()
        grid_sizes = self.get_grid_sizes()
        check(len(grid_sizes) > 0 and all(math.isfinite(size) and size > 0 for size in grid_sizes), ExperimentConfig.GRID_SIZES_KEY,
              "must be a list of positive numbers, got '%s'." % self.get_text(key=ExperimentConfig.GRID_SIZES_KEY))

        check(all(size >= 1 for size in self.get_ae_hidden()), ExperimentConfig.AE_HIDDEN_KEY, "layer widths must be >= 1.")
        check(self.get_ae_code_dim() >= 1, ExperimentConfig.AE_CODE_DIM_KEY, "must be >= 1, got %s." % self.get_ae_code_dim())
        check(self.get_ae_noise() > MIN_NOISE_AMPLITUDE, ExperimentConfig.AE_NOISE_KEY, "must be > 0.25, got %s." % self.get_ae_noise())
        check(self.get_ae_lambda() >= 0, ExperimentConfig.AE_LAMBDA_KEY, "must be >= 0, got %s." % self.get_ae_lambda())
        check(self.get_ae_update_every() >= 1, ExperimentConfig.AE_UPDATE_EVERY_KEY, "must be >= 1, got %s." % self.get_ae_update_every())
        check(self.get_ae_steps() >= 1, ExperimentConfig.AE_STEPS_KEY, "must be >= 1, got %s." % self.get_ae_steps())
        check(self.get_ae_batch_size() >= 1, ExperimentConfig.AE_BATCH_SIZE_KEY, "must be >= 1, got %s." % self.get_ae_batch_size())
        check(math.isfinite(self.get_ae_learning_rate()) and self.get_ae_learning_rate() > 0, ExperimentConfig.AE_LEARNING_RATE_KEY,
              "must be > 0, got %s." % self.get_ae_learning_rate())
        check(self.get_replay_capacity() >= 1, ExperimentConfig.REPLAY_CAPACITY_KEY, "must be >= 1, got %s." % self.get_replay_capacity())

        self.get_counter()
        self.get_cms_primes()
        check(math.isfinite(self.get_beta()) and self.get_beta() >= 0, ExperimentConfig.BETA_KEY, "must be >= 0, got %s." % self.get_beta())
        self.get_count_mode()

        self.get_agent()
        q_state_key = self.get_q_state_key()
        check(0 <= self.get_alpha() <= 1, ExperimentConfig.ALPHA_KEY, "must lie in [0, 1], got %s." % self.get_alpha())
        check(0 <= self.get_gamma() <= 1, ExperimentConfig.GAMMA_KEY, "must lie in [0, 1], got %s." % self.get_gamma())
        check(0 <= self.get_epsilon() <= 1, ExperimentConfig.EPSILON_KEY, "must lie in [0, 1], got %s." % self.get_epsilon())
        check(math.isfinite(self.get_learning_rate()) and self.get_learning_rate() >= 0, ExperimentConfig.LEARNING_RATE_KEY,
              "must be >= 0, got %s." % self.get_learning_rate())
        check(self.get_batch_size() >= 1, ExperimentConfig.BATCH_SIZE_KEY, "must be >= 1, got %s." % self.get_batch_size())

        check(self.get_iterations() >= 1, ExperimentConfig.ITERATIONS_KEY, "must be >= 1, got %s." % self.get_iterations())
        seeds = self.get_seeds()
        check(len(seeds) > 0 and all(seed >= 0 for seed in seeds), ExperimentConfig.SEEDS_KEY, "must be a non-empty list of seeds >= 0.")
        check(len(set(seeds)) == len(seeds), ExperimentConfig.SEEDS_KEY, "seeds must be distinct.")
        check(self.get_master_seed() >= 0, ExperimentConfig.MASTER_SEED_KEY, "must be >= 0, got %s." % self.get_master_seed())
        check(self.get_reference_k() >= 1, ExperimentConfig.REFERENCE_K_KEY, "must be >= 1, got %s." % self.get_reference_k())
        check(is_not_empty(self.get_output_dir()), ExperimentConfig.OUTPUT_DIR_KEY, "must not be empty.")

        # combinations of keys
        image_grid = env_kind == EnvKind.GRIDWORLD and observation_kind == ObservationKind.IMAGE
        if hasher_kind == HasherKind.NONE:
            check(q_state_key == QStateKey.EXACT, ExperimentConfig.Q_STATE_KEY_KEY,
                  "must be 'exact' when no hasher is used (hasher = none).")
        if hasher_kind == HasherKind.BASS:
            check(image_grid, ExperimentConfig.HASHER_KEY, "BASS hashes images: use env = gridworld with grid_observation = image.")
            check(self.get_grid_width() % self.get_bass_cell_size() == 0 and self.get_grid_height() % self.get_bass_cell_size() == 0,
                  ExperimentConfig.BASS_CELL_SIZE_KEY, "must divide the grid width and height.")
        if hasher_kind == HasherKind.LEARNED:
            check(env_kind == EnvKind.CHAIN or image_grid, ExperimentConfig.HASHER_KEY,
                  "learned hashing needs observations in a known range: use the chain or the gridworld with image observations.")
            # codes change each time the autoencoder is retrained, Q-values cannot be indexed by them
            check(self.get_agent() != AgentKind.Q_LEARNING or q_state_key == QStateKey.EXACT, ExperimentConfig.Q_STATE_KEY_KEY,
                  "must be 'exact' with learned hashing.")
        if hasher_kind == HasherKind.GRID:
            check(len(grid_sizes) in (1, self.get_observation_dim()), ExperimentConfig.GRID_SIZES_KEY,
                  "needs 1 or %s values (the observation dimension), got %s." % (self.get_observation_dim(), len(grid_sizes)))

    # SERIALIZATION

    def to_json(self) -> dict:
        values = {}
        for key in ExperimentConfig.DEFAULTS:
            getter = getattr(self, "get_" + key)
            value = getter()
            values[key] = value.value if isinstance(value, Enum) else value
        return values

    def to_text(self) -> str:
        return "".join(key + " = " + self.get_text(key=key) + "\n" for key in ExperimentConfig.DEFAULTS)

    def write_to_file(self, filepath: str) -> None:
        with open(filepath, "w", encoding="utf-8") as config_file:
            config_file.write(self.to_text())

    def write_run_info(self, directory: str) -> str:
        """
        Write the run information (system and canonical experiment config) next to the results.
        :param directory: A string being the directory of the results of the run.
        :return: A string being the path of the written file.
        """
        run_info = ExperimentConfig.new_parser()
        run_info.add_section(ExperimentConfig.SYSTEM_SECTION)
        run_info.set(ExperimentConfig.SYSTEM_SECTION, ExperimentConfig.PYTHON_VERSION_KEY, platform.python_version())
        run_info.set(ExperimentConfig.SYSTEM_SECTION, ExperimentConfig.NUMPY_VERSION_KEY, np.__version__)
        run_info.set(ExperimentConfig.SYSTEM_SECTION, ExperimentConfig.PANDAS_VERSION_KEY, pd.__version__)
        run_info.set(ExperimentConfig.SYSTEM_SECTION, ExperimentConfig.PLATFORM_KEY, platform.platform())
        try:
            user = getpass.getuser()
        except (KeyError, OSError):
            # no login name, e.g. in containers
            user = ""
        run_info.set(ExperimentConfig.SYSTEM_SECTION, ExperimentConfig.USER_KEY, user)
        run_info.set(ExperimentConfig.SYSTEM_SECTION, ExperimentConfig.EXECUTION_KEY, str(datetime.now()))
        run_info.add_section(ExperimentConfig.EXPERIMENT_SECTION)
        for key in ExperimentConfig.DEFAULTS:
            run_info.set(ExperimentConfig.EXPERIMENT_SECTION, key, self.get_text(key=key))
        os.makedirs(directory, exist_ok=True)
        filepath = os.path.join(directory, RUN_INFO_FILENAME)
        with open(filepath, "w", encoding="utf-8") as run_info_file:
            run_info.write(run_info_file)
        return filepath

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExperimentConfig):
            return NotImplemented
        return self.to_json() == other.to_json()

    def __repr__(self) -> str:
        return "ExperimentConfig(" + str(self.to_json()) + ")"
