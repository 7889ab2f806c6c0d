from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class StepResult:
    """
    The outcome of one environment step. The reward is the true environment reward, bonuses are only added
    downstream. done is set when the goal was reached (terminal) or when the horizon was hit (truncated).
    """
    observation: np.ndarray
    reward: float
    done: bool
    truncated: bool = False

    def is_terminal(self) -> bool:
        # a truncated episode did not end in a terminal state, its last state still has a value
        return self.done and not self.truncated
