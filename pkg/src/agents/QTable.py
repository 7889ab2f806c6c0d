import numpy as np


class QTable:
    """
    Action values Q(s, a) indexed by state keys (bytes). Unvisited entries read as initial_value.
    """

    def __init__(self, nb_actions: int, initial_value: float = 0.0):
        self.nb_actions = nb_actions
        self.initial_value = initial_value
        self.values = {}

    def get_values(self, state_key: bytes) -> np.ndarray:
        if state_key in self.values:
            return self.values[state_key]
        return np.full(self.nb_actions, self.initial_value)

    def get(self, state_key: bytes, action: int) -> float:
        return float(self.get_values(state_key=state_key)[action])

    def set(self, state_key: bytes, action: int, value: float) -> None:
        if state_key not in self.values:
            self.values[state_key] = np.full(self.nb_actions, self.initial_value)
        self.values[state_key][action] = value

    def max_value(self, state_key: bytes) -> float:
        return float(np.max(self.get_values(state_key=state_key)))

    def __len__(self) -> int:
        return len(self.values)
