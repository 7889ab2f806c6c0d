import numpy as np


class SoftmaxPolicy:
    """
    A linear softmax policy pi(a | s) proportional to exp(W phi(s) + b), with phi(s) the flattened observation
    divided by the observation scale. Temperature is 1. Weights start at 0 (the uniform policy).
    """

    def __init__(self, feature_dim: int, nb_actions: int, observation_scale: float = 1.0):
        self.feature_dim = feature_dim
        self.nb_actions = nb_actions
        self.observation_scale = float(observation_scale)
        self.weights = np.zeros((nb_actions, feature_dim))
        self.biases = np.zeros(nb_actions)

    def features(self, observation: np.ndarray) -> np.ndarray:
        return np.asarray(observation, dtype=np.float64).reshape(-1) / self.observation_scale

    def probabilities(self, observation: np.ndarray) -> np.ndarray:
        logits = self.weights @ self.features(observation=observation) + self.biases
        logits = logits - logits.max()
        exponentials = np.exp(logits)
        return exponentials / exponentials.sum()

    def log_probability(self, observation: np.ndarray, action: int) -> float:
        logits = self.weights @ self.features(observation=observation) + self.biases
        return float(logits[action] - np.logaddexp.reduce(logits))

    def sample(self, observation: np.ndarray, rng: np.random.Generator) -> int:
        cumulative = np.cumsum(self.probabilities(observation=observation))
        action = int(np.searchsorted(cumulative, rng.random() * cumulative[-1], side="right"))
        return min(action, self.nb_actions - 1)

    def log_probability_gradient(self, observation: np.ndarray, action: int) -> tuple[np.ndarray, np.ndarray]:
        # d log pi(a|s) / d logits = onehot(a) - pi(.|s)
        features = self.features(observation=observation)
        logit_gradient = -self.probabilities(observation=observation)
        logit_gradient[action] += 1.0
        return np.outer(logit_gradient, features), logit_gradient

    def get_parameters(self) -> list[np.ndarray]:
        return [self.weights, self.biases]
