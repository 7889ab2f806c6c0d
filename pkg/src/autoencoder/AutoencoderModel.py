import copy
import struct
from typing import Any

import numpy as np

from autoencoder.AdamOptimizer import AdamOptimizer
from autoencoder.TrainBatch import TrainBatch
from utils.ErrorKind import ErrorKind
from utils.ExplorationError import ExplorationError
from utils.constants import MIN_NOISE_AMPLITUDE, CODE_CLAMP_EPSILON, AUTOENCODER_MAGIC, AUTOENCODER_FORMAT_VERSION
from utils.utils import new_generator

HEADER = struct.Struct("<4sHI")  # magic, version, number of layer sizes


def sigmoid(z: np.ndarray) -> np.ndarray:
    # tanh form, stable for large |z|
    return 0.5 * (1.0 + np.tanh(0.5 * z))


def binarization_penalty(code: np.ndarray) -> np.ndarray:
    """
    The per-unit binarization pressure min{(1 - b)^2, b^2}: 0 exactly on {0, 1}, maximal (0.25) at b = 0.5.
    """
    return np.minimum((1.0 - code) ** 2, code ** 2)


def binarization_penalty_gradient(code: np.ndarray) -> np.ndarray:
    # the two parabolas meet at 0.5 with opposite slopes, the subgradient taken there is 0
    return np.where(code < 0.5, 2.0 * code, np.where(code > 0.5, -2.0 * (1.0 - code), 0.0))


class AutoencoderModel:
    """
    A dense autoencoder whose bottleneck is a layer of D sigmoid units b(s), the learned hash code.

    Architecture: input -> hidden (tanh) ... -> code (sigmoid) -> hidden (tanh) ... -> output (sigmoid),
    the decoder mirroring the encoder. During training, uniform noise U(-a, a) is added to the code activations,
    clamped to [1e-6, 1 - 1e-6], before they feed the decoder. The loss is

        L = 1/N sum_n [ -log p(s_n) + lambda / D sum_i min{(1 - b_i(s_n))^2, b_i(s_n)^2} ]

    where p(s_n) is the element-wise Bernoulli likelihood of the input under the reconstruction.
    """

    def __init__(self, input_dim: int, hidden_sizes: list[int], code_dim: int, noise_amplitude: float,
                 binarization_weight: float, seed: int):
        """
        Initialize a new autoencoder (init_ae).
        :param input_dim: An integer being the dimension of the (normalized) observations.
        :param hidden_sizes: A list of integers being the widths of the encoder hidden layers (mirrored in the decoder).
        :param code_dim: An integer being the number D of sigmoid units in the code layer.
        :param noise_amplitude: A float being the half-width a of the injected noise; must be > 1/4.
        :param binarization_weight: A float being lambda, the weight of the binarization pressure.
        :param seed: An integer seeding the weight initialization, uniform in +-sqrt(6 / (fan_in + fan_out)).
        """
        if input_dim < 1 or code_dim < 1 or any(size < 1 for size in hidden_sizes):
            raise ExplorationError(ErrorKind.INVALID_DIMENSION,
                                   "Layer sizes must be >= 1, got input %s, hidden %s, code %s." % (input_dim, hidden_sizes, code_dim))
        if not noise_amplitude > MIN_NOISE_AMPLITUDE:
            raise ExplorationError(ErrorKind.NOISE_TOO_SMALL,
                                   "The noise amplitude must be > 1/4 to force distinct codes apart, got %s." % noise_amplitude)
        if binarization_weight < 0:
            raise ExplorationError(ErrorKind.CONFIG_INVALID, "ae_lambda: must be >= 0, got %s." % binarization_weight)

        self.input_dim = input_dim
        self.hidden_sizes = list(hidden_sizes)
        self.code_dim = code_dim
        self.noise_amplitude = float(noise_amplitude)
        self.binarization_weight = float(binarization_weight)
        self.layer_sizes = [input_dim] + self.hidden_sizes + [code_dim] + list(reversed(self.hidden_sizes)) + [input_dim]
        self.code_layer = len(self.hidden_sizes)  # index of the layer whose output is the code

        rng = new_generator(seed)
        self.weights = []
        self.biases = []
        for fan_in, fan_out in zip(self.layer_sizes[:-1], self.layer_sizes[1:]):
            limit = np.sqrt(6.0 / (fan_in + fan_out))
            self.weights.append(rng.uniform(-limit, limit, size=(fan_out, fan_in)))
            self.biases.append(np.zeros(fan_out))

    def get_nb_layers(self) -> int:
        return len(self.weights)

    def get_parameters(self) -> list[np.ndarray]:
        # weights and biases interleaved, layer after layer: [W0, b0, W1, b1, ...]
        parameters = []
        for weight, bias in zip(self.weights, self.biases):
            parameters.append(weight)
            parameters.append(bias)
        return parameters

    def get_nb_parameters(self) -> int:
        return sum(parameter.size for parameter in self.get_parameters())

    def sample_noise(self, nb_samples: int, rng: np.random.Generator) -> np.ndarray:
        return rng.uniform(-self.noise_amplitude, self.noise_amplitude, size=(nb_samples, self.code_dim))

    def propagate(self, inputs: np.ndarray, noise: np.ndarray | None) -> dict[str, Any]:
        """
        Run the network on a batch and keep the intermediate values needed by back-propagation.
        :param inputs: A numpy array of shape (N, input_dim).
        :param noise: A numpy array of shape (N, code_dim) added to the code activations, or None (evaluation).
        :return: A dict with the layer inputs, the code b, the clamping mask, the output logits and reconstruction.
        """
        activations = [inputs]
        code = None
        clamp_mask = None
        logits = None
        current = inputs
        for index, (weight, bias) in enumerate(zip(self.weights, self.biases)):
            pre_activation = current @ weight.T + bias
            if index == self.code_layer:
                code = np.clip(sigmoid(pre_activation), CODE_CLAMP_EPSILON, 1.0 - CODE_CLAMP_EPSILON)
                if noise is None:
                    current = code
                    clamp_mask = np.ones_like(code)
                else:
                    noisy = code + noise
                    clamp_mask = ((noisy > CODE_CLAMP_EPSILON) & (noisy < 1.0 - CODE_CLAMP_EPSILON)).astype(np.float64)
                    current = np.clip(noisy, CODE_CLAMP_EPSILON, 1.0 - CODE_CLAMP_EPSILON)
            elif index == self.get_nb_layers() - 1:
                logits = pre_activation
                current = np.clip(sigmoid(pre_activation), CODE_CLAMP_EPSILON, 1.0 - CODE_CLAMP_EPSILON)
            else:
                current = np.tanh(pre_activation)
            activations.append(current)
        return {"activations": activations, "code": code, "clamp_mask": clamp_mask, "logits": logits,
                "reconstruction": activations[-1]}

    def forward(self, x: np.ndarray, rng: np.random.Generator | None = None, train_mode: bool = False) -> tuple[np.ndarray, np.ndarray]:
        """
        Compute the code b(x) and the reconstruction p of one input vector (or of a batch, one input per row).
        In train mode, U(-a, a) noise drawn from rng is added to the code activations before decoding.
        Inputs must lie in [0, 1]. Codes and reconstructions are clipped to [1e-6, 1 - 1e-6].
        """
        inputs = np.asarray(x, dtype=np.float64)
        single = inputs.ndim == 1
        inputs = np.atleast_2d(inputs)
        if inputs.shape[1] != self.input_dim:
            raise ExplorationError(ErrorKind.DIMENSION_MISMATCH, "The autoencoder expects inputs of dimension %s, got %s." % (self.input_dim, inputs.shape[1]))
        if not np.all(np.isfinite(inputs)):
            raise ExplorationError(ErrorKind.NON_FINITE_INPUT, "The autoencoder input contains non-finite values.")
        if np.any(inputs < 0) or np.any(inputs > 1):
            raise ExplorationError(ErrorKind.INTENSITY_OUT_OF_RANGE, "The autoencoder inputs must be normalized to [0, 1].")
        noise = self.sample_noise(nb_samples=inputs.shape[0], rng=rng) if train_mode else None
        result = self.propagate(inputs=inputs, noise=noise)
        if single:
            return result["code"][0], result["reconstruction"][0]
        return result["code"], result["reconstruction"]

    def encode(self, x: np.ndarray) -> np.ndarray:
        code, _ = self.forward(x=x, train_mode=False)
        return code

    def resolve_noise(self, batch: TrainBatch, rng: np.random.Generator | None, noise: np.ndarray | None) -> np.ndarray | None:
        if noise is not None:
            return np.asarray(noise, dtype=np.float64).reshape(len(batch), self.code_dim)
        if rng is not None:
            return self.sample_noise(nb_samples=len(batch), rng=rng)
        return None

    def compute_loss(self, inputs: np.ndarray, result: dict[str, Any]) -> float:
        logits = result["logits"]
        # -log p(s) of a Bernoulli with p = sigmoid(logits) is softplus(logits) - s * logits
        negative_log_likelihood = np.sum(np.logaddexp(0.0, logits) - inputs * logits)
        penalty = (self.binarization_weight / self.code_dim) * np.sum(binarization_penalty(result["code"]))
        return float((negative_log_likelihood + penalty) / inputs.shape[0])

    def loss(self, batch: TrainBatch, rng: np.random.Generator | None = None, noise: np.ndarray | None = None) -> float:
        """
        The loss of a batch. Noise is taken from `noise` when given, drawn from `rng` otherwise; without both,
        the loss is evaluated without noise.
        """
        result = self.propagate(inputs=batch.inputs, noise=self.resolve_noise(batch=batch, rng=rng, noise=noise))
        return self.compute_loss(inputs=batch.inputs, result=result)

    def loss_and_grad(self, batch: TrainBatch, rng: np.random.Generator | None = None,
                      noise: np.ndarray | None = None) -> tuple[float, list[np.ndarray]]:
        """
        The loss and its exact gradient at the sampled noise realization; the noise is a constant of the
        differentiation (which is what lets gradients reach the encoder despite the rounding of the codes).
        :return: A float and a list of gradients aligned with get_parameters().
        """
        inputs = batch.inputs
        nb_samples = inputs.shape[0]
        result = self.propagate(inputs=inputs, noise=self.resolve_noise(batch=batch, rng=rng, noise=noise))
        activations = result["activations"]
        code = result["code"]

        weight_gradients = [None] * self.get_nb_layers()
        bias_gradients = [None] * self.get_nb_layers()
        delta = (sigmoid(result["logits"]) - inputs) / nb_samples  # dL / d(output logits)
        for index in range(self.get_nb_layers() - 1, -1, -1):
            weight_gradients[index] = delta.T @ activations[index]
            bias_gradients[index] = delta.sum(axis=0)
            if index == 0:
                break
            upstream = delta @ self.weights[index]  # dL / d(input of layer index)
            if index - 1 == self.code_layer:
                # through the clamp (noise is constant) then add the binarization pressure, then through the sigmoid
                penalty_gradient = (self.binarization_weight / self.code_dim) * binarization_penalty_gradient(code) / nb_samples
                delta = (upstream * result["clamp_mask"] + penalty_gradient) * code * (1.0 - code)
            else:
                delta = upstream * (1.0 - activations[index] ** 2)

        gradients = []
        for weight_gradient, bias_gradient in zip(weight_gradients, bias_gradients):
            gradients.append(weight_gradient)
            gradients.append(bias_gradient)
        return self.compute_loss(inputs=inputs, result=result), gradients

    def grad(self, batch: TrainBatch, rng: np.random.Generator | None = None, noise: np.ndarray | None = None) -> list[np.ndarray]:
        _, gradients = self.loss_and_grad(batch=batch, rng=rng, noise=noise)
        return gradients

    def train_step(self, batch: TrainBatch, optimizer: AdamOptimizer, learning_rate: float, rng: np.random.Generator) -> float:
        """
        One Adam update of all the weights on one batch (noise drawn from rng).
        :return: A float being the loss before the update.
        """
        loss_value, gradients = self.loss_and_grad(batch=batch, rng=rng)
        optimizer.step(parameters=self.get_parameters(), gradients=gradients, learning_rate=learning_rate)
        return loss_value

    def new_optimizer(self) -> AdamOptimizer:
        return AdamOptimizer(parameters=self.get_parameters())

    @staticmethod
    def binarize(code: np.ndarray) -> np.ndarray:
        # round half up: 0.5 becomes 1
        return (np.asarray(code) >= 0.5).astype(np.uint8)

    def snapshot(self) -> "AutoencoderModel":
        """
        A frozen copy, safe to read from several threads while this instance keeps training.
        """
        frozen = copy.deepcopy(self)
        for parameter in frozen.get_parameters():
            parameter.setflags(write=False)
        return frozen

    # CHECKPOINTS
    # layout (little-endian): magic b"HBAE" | version (uint16) | number of layer sizes n (uint32) |
    # n layer sizes (uint32) | code layer index (uint32) | a (float64) | lambda (float64) |
    # then, layer after layer, the weight matrix (row-major float64) followed by the bias vector (float64)

    def to_bytes(self) -> bytes:
        chunks = [HEADER.pack(AUTOENCODER_MAGIC, AUTOENCODER_FORMAT_VERSION, len(self.layer_sizes)),
                  struct.pack("<%sI" % len(self.layer_sizes), *self.layer_sizes),
                  struct.pack("<Idd", self.code_layer, self.noise_amplitude, self.binarization_weight)]
        for weight, bias in zip(self.weights, self.biases):
            chunks.append(np.ascontiguousarray(weight, dtype="<f8").tobytes())
            chunks.append(np.ascontiguousarray(bias, dtype="<f8").tobytes())
        return b"".join(chunks)

    @classmethod
    def from_bytes(cls, data: bytes) -> "AutoencoderModel":
        try:
            magic, version, nb_sizes = HEADER.unpack_from(data, 0)
            if magic != AUTOENCODER_MAGIC or version != AUTOENCODER_FORMAT_VERSION:
                raise ExplorationError(ErrorKind.SNAPSHOT_INVALID, "Unknown autoencoder checkpoint (magic %s, version %s)." % (magic, version))
            offset = HEADER.size
            layer_sizes = list(struct.unpack_from("<%sI" % nb_sizes, data, offset))
            offset += 4 * nb_sizes
            code_layer, noise_amplitude, binarization_weight = struct.unpack_from("<Idd", data, offset)
            offset += struct.calcsize("<Idd")
            model = cls(input_dim=layer_sizes[0], hidden_sizes=layer_sizes[1:code_layer + 1], code_dim=layer_sizes[code_layer + 1],
                        noise_amplitude=noise_amplitude, binarization_weight=binarization_weight, seed=0)
            if model.layer_sizes != layer_sizes:
                raise ExplorationError(ErrorKind.SNAPSHOT_INVALID, "The checkpoint layer sizes %s are not those of a mirrored autoencoder." % layer_sizes)
            for index, (fan_in, fan_out) in enumerate(zip(layer_sizes[:-1], layer_sizes[1:])):
                model.weights[index] = np.frombuffer(data, dtype="<f8", count=fan_in * fan_out, offset=offset).astype(np.float64).reshape(fan_out, fan_in)
                offset += 8 * fan_in * fan_out
                model.biases[index] = np.frombuffer(data, dtype="<f8", count=fan_out, offset=offset).astype(np.float64)
                offset += 8 * fan_out
        except (struct.error, IndexError) as error:
            raise ExplorationError(ErrorKind.SNAPSHOT_INVALID, "Truncated autoencoder checkpoint: " + str(error))
        except ValueError as error:
            if isinstance(error, ExplorationError):
                raise
            raise ExplorationError(ErrorKind.SNAPSHOT_INVALID, "Truncated autoencoder checkpoint: " + str(error))
        if offset != len(data):
            raise ExplorationError(ErrorKind.SNAPSHOT_INVALID, "The autoencoder checkpoint has %s trailing bytes." % (len(data) - offset))
        return model

    def write_to_file(self, filepath: str) -> None:
        with open(filepath, "wb") as checkpoint_file:
            checkpoint_file.write(self.to_bytes())

    @classmethod
    def read_from_file(cls, filepath: str) -> "AutoencoderModel":
        with open(filepath, "rb") as checkpoint_file:
            return cls.from_bytes(data=checkpoint_file.read())
