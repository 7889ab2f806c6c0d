from dataclasses import dataclass


@dataclass(frozen=True)
class RunSummary:
    """
    Aggregates over the seeds of a run: mean and standard deviation of the true return at the last iteration,
    and the median number of iterations needed to reach the goal once (+inf when most seeds never did).
    """
    final_mean_return: float
    final_std_return: float
    median_iterations_to_first_goal: float
    nb_seeds: int
