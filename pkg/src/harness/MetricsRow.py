from dataclasses import dataclass

from utils.constants import METRICS_COLUMNS, TIMING_COLUMNS


@dataclass(frozen=True)
class MetricsRow:
    """
    The measures of one iteration of one seed. ae_loss is None when hashing is not learned.
    """
    iteration: int
    seed: int
    mean_true_return: float
    mean_bonus: float
    distinct_keys: int
    counter_bytes: int
    ae_loss: float | None
    wall_ms: float

    def to_metrics_record(self) -> dict:
        record = {column: getattr(self, column) for column in METRICS_COLUMNS}
        return record

    def to_timing_record(self) -> dict:
        return {column: getattr(self, column) for column in TIMING_COLUMNS}
