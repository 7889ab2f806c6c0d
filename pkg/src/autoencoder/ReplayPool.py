from collections import deque

import numpy as np

from autoencoder.TrainBatch import TrainBatch
from utils.ErrorKind import ErrorKind
from utils.ExplorationError import ExplorationError


class ReplayPool:
    """
    A bounded FIFO of observations (normalized vectors) on which the autoencoder is retrained.
    When full, adding an observation evicts the oldest one.
    """

    def __init__(self, capacity: int):
        if capacity < 1:
            raise ExplorationError(ErrorKind.INVALID_SIZE, "The replay pool capacity must be >= 1, got %s." % capacity)
        self.capacity = capacity
        self.buffer = deque(maxlen=capacity)

    def add(self, observation: np.ndarray) -> None:
        self.buffer.append(np.asarray(observation, dtype=np.float64).reshape(-1))

    def add_many(self, observations: list[np.ndarray]) -> None:
        for observation in observations:
            self.add(observation=observation)

    def sample(self, nb_samples: int, rng: np.random.Generator) -> TrainBatch:
        if len(self.buffer) == 0:
            raise ExplorationError(ErrorKind.EMPTY_BATCH, "Cannot sample from an empty replay pool.")
        nb_samples = min(nb_samples, len(self.buffer))
        indices = rng.choice(len(self.buffer), size=nb_samples, replace=False)
        return TrainBatch(inputs=np.stack([self.buffer[index] for index in indices]))

    def __len__(self) -> int:
        return len(self.buffer)
