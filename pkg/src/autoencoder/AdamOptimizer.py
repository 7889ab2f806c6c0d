import math

import numpy as np

from utils.ErrorKind import ErrorKind
from utils.ExplorationError import ExplorationError
from utils.constants import ADAM_BETA1, ADAM_BETA2, ADAM_EPSILON


class AdamOptimizer:
    """
    Adam with the standard first and second moment estimates and their bias correction.
    The state is aligned with a list of parameter arrays, which are updated in place.
    """

    def __init__(self, parameters: list[np.ndarray], beta1: float = ADAM_BETA1, beta2: float = ADAM_BETA2,
                 epsilon: float = ADAM_EPSILON):
        self.beta1 = beta1
        self.beta2 = beta2
        self.epsilon = epsilon
        self.first_moments = [np.zeros_like(parameter) for parameter in parameters]
        self.second_moments = [np.zeros_like(parameter) for parameter in parameters]
        self.nb_steps = 0

    def step(self, parameters: list[np.ndarray], gradients: list[np.ndarray], learning_rate: float) -> None:
        if not math.isfinite(learning_rate) or learning_rate <= 0:
            raise ExplorationError(ErrorKind.INVALID_LEARNING_RATE, "The learning rate must be finite and > 0, got %s." % learning_rate)
        self.nb_steps += 1
        correction1 = 1.0 - self.beta1 ** self.nb_steps
        correction2 = 1.0 - self.beta2 ** self.nb_steps
        for parameter, gradient, first, second in zip(parameters, gradients, self.first_moments, self.second_moments):
            first *= self.beta1
            first += (1.0 - self.beta1) * gradient
            second *= self.beta2
            second += (1.0 - self.beta2) * gradient * gradient
            parameter -= learning_rate * (first / correction1) / (np.sqrt(second / correction2) + self.epsilon)
