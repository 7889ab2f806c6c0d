from dataclasses import dataclass

from harness.MetricsRow import MetricsRow


@dataclass
class SeedResult:
    """
    What the run of one seed sends back to the harness: its metrics and checkpoints (serialized, so that
    results can come back from worker processes).
    """
    seed: int
    rows: list[MetricsRow]
    iterations_to_first_goal: float
    counter_snapshot: bytes | None
    autoencoder_checkpoint: bytes | None
    state_checkpoint: bytes | None = None

    def get_final_mean_return(self) -> float:
        return self.rows[-1].mean_true_return
