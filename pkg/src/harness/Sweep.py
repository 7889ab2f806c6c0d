import os
from concurrent.futures import ProcessPoolExecutor

import pandas as pd

from config.ExperimentConfig import ExperimentConfig
from harness.MetricsWriter import MetricsWriter
from harness.Runner import Runner
from harness.RunSummary import RunSummary
from utils.ErrorKind import ErrorKind
from utils.ExplorationError import ExplorationError
from utils.SweepAxis import SweepAxis
from utils.constants import COMPARISON_FILENAME
from utils.setup_logger import log, add_file_handler, remove_file_handlers
from utils.utils import derive_seed, format_value

STATUS_OK = "ok"
STATUS_FAILED = "failed"
COMPARISON_COLUMNS = ["cell", "value", "beta", "status", "final_mean_return", "final_std_return", "median_iterations_to_first_goal"]


def run_cell(config_text: str) -> RunSummary:
    config = ExperimentConfig.from_text(text=config_text)
    return Runner(config=config, jobs=1, with_log_file=False).run()


class Sweep:
    """
    Run a base config once per value of one axis (k, beta, backend, count_mode or grid_size).
    Each cell is written in <output_dir>/<name>/<name>-<axis>-<value>/ and a comparison table (value -> final
    return) is written in <output_dir>/<name>/comparison.csv once every cell is done.

    The seeds of cell i are derived from (master_seed, i) and the configured seeds, so adding a cell never
    changes the results of the others.
    """

    def __init__(self, config: ExperimentConfig, axis: SweepAxis, values: list[str], jobs: int = 1):
        if len(values) == 0:
            raise ExplorationError(ErrorKind.CONFIG_INVALID, "values: a sweep needs at least one value.")
        self.config = config
        self.axis = axis
        self.values = [value.strip() for value in values]
        self.jobs = max(jobs, 1)
        # every cell is validated before anything runs
        self.cell_configs = [self.make_cell_config(cell_index=index, value=value) for index, value in enumerate(self.values)]

    def get_sweep_dir(self) -> str:
        return os.path.join(self.config.get_output_dir(), self.config.get_name())

    def make_cell_config(self, cell_index: int, value: str) -> ExperimentConfig:
        cell_config = self.config.copy()
        base_beta = self.config.get_beta()
        if self.axis == SweepAxis.K:
            cell_config.set_value(key=ExperimentConfig.HASH_K_KEY, value=value)
            k = cell_config.get_hash_k()
            ExperimentConfig.check(k >= 1, ExperimentConfig.HASH_K_KEY, "sweep values must be >= 1, got %s." % k)
            # keep the average bonus at the same scale for every k
            cell_config.set_value(key=ExperimentConfig.BETA_KEY, value=base_beta * self.config.get_reference_k() / k)
        elif self.axis == SweepAxis.BETA:
            cell_config.set_value(key=ExperimentConfig.BETA_KEY, value=value)
        elif self.axis == SweepAxis.BACKEND:
            cell_config.set_value(key=ExperimentConfig.COUNTER_KEY, value=value)
        elif self.axis == SweepAxis.COUNT_MODE:
            cell_config.set_value(key=ExperimentConfig.COUNT_MODE_KEY, value=value)
        else:
            cell_config.set_value(key=ExperimentConfig.GRID_SIZES_KEY, value=value)
            grid_size = cell_config.get_grid_sizes()[0]
            reference_size = self.config.get_grid_sizes()[0]
            # coarser grids visit each cell more often, the bonus scales accordingly
            cell_config.set_value(key=ExperimentConfig.BETA_KEY, value=base_beta * grid_size / reference_size)

        cell_config.set_value(key=ExperimentConfig.NAME_KEY, value="%s-%s-%s" % (self.config.get_name(), self.axis.value, value))
        cell_config.set_value(key=ExperimentConfig.OUTPUT_DIR_KEY, value=self.get_sweep_dir())
        cell_seed = derive_seed(self.config.get_master_seed(), cell_index)
        cell_config.set_value(key=ExperimentConfig.SEEDS_KEY, value=[derive_seed(cell_seed, seed) for seed in self.config.get_seeds()])
        cell_config.validate()
        return cell_config

    def run_cells(self) -> list[RunSummary | Exception]:
        config_texts = [cell_config.to_text() for cell_config in self.cell_configs]
        outcomes = []
        if self.jobs == 1:
            for config_text in config_texts:
                try:
                    outcomes.append(run_cell(config_text=config_text))
                except Exception as error:
                    outcomes.append(error)
            return outcomes
        with ProcessPoolExecutor(max_workers=self.jobs) as executor:
            futures = [executor.submit(run_cell, config_text) for config_text in config_texts]
            for future in futures:
                try:
                    outcomes.append(future.result())
                except Exception as error:
                    outcomes.append(error)
        return outcomes

    def comparison_dataframe(self, outcomes: list[RunSummary | Exception]) -> pd.DataFrame:
        records = []
        for index, (value, cell_config, outcome) in enumerate(zip(self.values, self.cell_configs, outcomes)):
            record = {"cell": index, "value": value, "beta": cell_config.get_beta()}
            if isinstance(outcome, RunSummary):
                record.update({"status": STATUS_OK, "final_mean_return": outcome.final_mean_return,
                               "final_std_return": outcome.final_std_return,
                               "median_iterations_to_first_goal": format_value(outcome.median_iterations_to_first_goal)})
            else:
                record.update({"status": STATUS_FAILED, "final_mean_return": None, "final_std_return": None,
                               "median_iterations_to_first_goal": None})
            records.append(record)
        return pd.DataFrame(records, columns=COMPARISON_COLUMNS)

    def run(self) -> pd.DataFrame:
        """
        Run every cell (a failing cell is reported and the others go on) and write the comparison table.
        :return: A pandas DataFrame being the comparison table.
        """
        sweep_dir = self.get_sweep_dir()
        os.makedirs(sweep_dir, exist_ok=True)
        add_file_handler(directory=sweep_dir)
        try:
            log.info("Sweep of '%s' over %s: %s", self.config.get_name(), self.axis.value, self.values)
            outcomes = self.run_cells()
            for value, outcome in zip(self.values, outcomes):
                if isinstance(outcome, Exception):
                    log.warning("The cell %s = %s failed: %s", self.axis.value, value, outcome)
            comparison = self.comparison_dataframe(outcomes=outcomes)
            MetricsWriter.to_csv(dataframe=comparison, filepath=os.path.join(sweep_dir, COMPARISON_FILENAME))
            log.info("Comparison of the cells:\n%s", comparison.to_string(index=False))
            return comparison
        finally:
            remove_file_handlers()

    @staticmethod
    def has_failures(comparison: pd.DataFrame) -> bool:
        return bool((comparison["status"] == STATUS_FAILED).any())
