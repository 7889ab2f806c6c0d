import os
import pickle
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from agents.Experiment import Experiment
from autoencoder.AutoencoderModel import AutoencoderModel
from config.ExperimentConfig import ExperimentConfig
from counting.CounterSnapshot import CounterSnapshot
from harness.MetricsWriter import MetricsWriter
from harness.RunSummary import RunSummary
from harness.SeedResult import SeedResult
from utils.constants import METRICS_FILENAME, TIMING_FILENAME, COUNTER_CHECKPOINT_FILENAME, AUTOENCODER_CHECKPOINT_FILENAME, \
    STATE_CHECKPOINT_FILENAME
from utils.setup_logger import log, add_file_handler, remove_file_handlers
from utils.utils import median_with_inf


def restore_seed(experiment: Experiment, checkpoint_dir: str) -> bool:
    """
    Load the checkpoints of the experiment's seed from checkpoint_dir, if its state file is there.
    State files are pickles: only resume from directories written by this program.
    :return: A boolean being True when the experiment was restored, False when it starts from scratch.
    """
    state_filepath = os.path.join(checkpoint_dir, STATE_CHECKPOINT_FILENAME % experiment.seed)
    if not os.path.isfile(state_filepath):
        return False
    with open(state_filepath, "rb") as state_file:
        state = pickle.load(state_file)
    counter_filepath = os.path.join(checkpoint_dir, COUNTER_CHECKPOINT_FILENAME % experiment.seed)
    counter = CounterSnapshot.read_from_file(filepath=counter_filepath) if os.path.isfile(counter_filepath) else None
    autoencoder_filepath = os.path.join(checkpoint_dir, AUTOENCODER_CHECKPOINT_FILENAME % experiment.seed)
    model = AutoencoderModel.read_from_file(filepath=autoencoder_filepath) if os.path.isfile(autoencoder_filepath) else None
    experiment.restore(state=state, counter=counter, model=model)
    return True


def run_seed(config_text: str, seed: int, checkpoint_dir: str | None = None) -> SeedResult:
    """
    Run one seed of an experiment. The config travels as text so that this function can run in a worker process.
    :param checkpoint_dir: A directory whose checkpoints of this seed are resumed from, None to start from scratch.
    """
    config = ExperimentConfig.from_text(text=config_text)
    experiment = Experiment(config=config, seed=seed)
    if checkpoint_dir is not None and not restore_seed(experiment=experiment, checkpoint_dir=checkpoint_dir):
        log.info("seed %s has no checkpoint in %s, it starts from scratch", seed, checkpoint_dir)
    rows = experiment.run()
    counter = experiment.pipeline.get_counter()
    return SeedResult(seed=seed, rows=rows, iterations_to_first_goal=experiment.get_iterations_to_first_goal(),
                      counter_snapshot=CounterSnapshot.dump(counter=counter) if counter is not None else None,
                      autoencoder_checkpoint=experiment.model.to_bytes() if experiment.model is not None else None,
                      state_checkpoint=pickle.dumps(experiment.get_state()))


class Runner:
    """
    Run every seed of a config and write its results in <output_dir>/<name>/: metrics.csv (with its summary line),
    timing.csv, run-info.ini, the log file and the checkpoints of each seed (counter, autoencoder and learner state).
    With resume, each seed continues from the checkpoints of a previous run in the same directory.
    """

    def __init__(self, config: ExperimentConfig, jobs: int = 1, with_log_file: bool = True, resume: bool = False):
        self.config = config
        self.jobs = max(jobs, 1)
        self.with_log_file = with_log_file
        self.resume = resume
        self.results = []

    def get_results_dir(self) -> str:
        return os.path.join(self.config.get_output_dir(), self.config.get_name())

    def run_seeds(self) -> list[SeedResult]:
        config_text = self.config.to_text()
        seeds = self.config.get_seeds()
        checkpoint_dir = self.get_results_dir() if self.resume else None
        if self.jobs == 1 or len(seeds) == 1:
            return [run_seed(config_text=config_text, seed=seed, checkpoint_dir=checkpoint_dir) for seed in seeds]
        with ProcessPoolExecutor(max_workers=self.jobs) as executor:
            # map() yields the results in the order of the seeds, whatever the scheduling
            return list(executor.map(run_seed, [config_text] * len(seeds), seeds, [checkpoint_dir] * len(seeds)))

    @staticmethod
    def summarize(results: list[SeedResult]) -> RunSummary:
        final_returns = np.array([result.get_final_mean_return() for result in results])
        return RunSummary(final_mean_return=float(np.mean(final_returns)), final_std_return=float(np.std(final_returns)),
                          median_iterations_to_first_goal=median_with_inf([result.iterations_to_first_goal for result in results]),
                          nb_seeds=len(results))

    def write_results(self, results: list[SeedResult], summary: RunSummary) -> None:
        results_dir = self.get_results_dir()
        rows = [row for result in results for row in result.rows]
        MetricsWriter.write_metrics(rows=rows, summary=summary, filepath=os.path.join(results_dir, METRICS_FILENAME))
        MetricsWriter.write_timing(rows=rows, filepath=os.path.join(results_dir, TIMING_FILENAME))
        for result in results:
            checkpoints = [(COUNTER_CHECKPOINT_FILENAME, result.counter_snapshot), (AUTOENCODER_CHECKPOINT_FILENAME, result.autoencoder_checkpoint),
                           (STATE_CHECKPOINT_FILENAME, result.state_checkpoint)]
            for filename, data in checkpoints:
                if data is not None:
                    with open(os.path.join(results_dir, filename % result.seed), "wb") as checkpoint_file:
                        checkpoint_file.write(data)

    def run(self) -> RunSummary:
        results_dir = self.get_results_dir()
        os.makedirs(results_dir, exist_ok=True)
        log_filepath = add_file_handler(directory=results_dir) if self.with_log_file else None
        try:
            self.config.write_run_info(directory=results_dir)
            log.info("Run '%s' with seeds %s, results in %s", self.config.get_name(), self.config.get_seeds(), results_dir)
            self.results = self.run_seeds()
            summary = Runner.summarize(results=self.results)
            self.write_results(results=self.results, summary=summary)
            log.info("Final true return %s +- %s over %s seeds, median iterations to first goal: %s",
                     summary.final_mean_return, summary.final_std_return, summary.nb_seeds, summary.median_iterations_to_first_goal)
            return summary
        finally:
            if log_filepath is not None:
                remove_file_handlers()
