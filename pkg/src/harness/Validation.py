import math
import os

import numpy as np
import pandas as pd

from autoencoder.AutoencoderModel import AutoencoderModel
from autoencoder.TrainBatch import TrainBatch
from counting.CountMinSketch import CountMinSketch
from counting.ExactCounter import ExactCounter
from harness.ValidationResult import ValidationResult
from hashing.CountKey import CountKey
from hashing.SimHasher import SimHasher
from utils.TimeMeasurer import TimeMeasurer
from utils.PrimeSet import PrimeSet
from utils.ValidationSuite import ValidationSuite
from utils.constants import PRIMES_6K
from utils.setup_logger import log
from utils.utils import new_generator

GREEN = "\033[32m"
RED = "\033[31m"
RESET = "\033[0m"


class Validation:
    """
    Statistical and numerical property suites of the library, run by the `validate` command:
    - lsh: the per-bit disagreement rate of SimHash equals theta / pi;
    - sketch: the over-count rate of fresh keys in a Count-Min sketch matches prod_j (1 - e^{-N/p_j}), and the
      sketch never under-counts;
    - gradcheck: the analytic gradients of the autoencoder loss match central finite differences;
    - binarization: training with lambda = 10 saturates the code units;
    - speed: increments per second of the exact table and of the sketch (informative, always passes).
    """

    def __init__(self, seed: int = 0):
        self.seed = seed

    # LSH

    def validate_lsh(self, nb_bits: int = 100_000, tolerance: float = 0.01) -> list[ValidationResult]:
        # a k x 2 projection holds k independent single-bit hashers
        hasher = SimHasher(k=nb_bits, input_dim=2, seed=self.seed)
        results = []
        for theta in (0.0, math.pi / 4, math.pi / 2):
            rate = Validation.disagreement_rate(hasher=hasher, theta=theta)
            expected = theta / math.pi
            passed = rate == 0.0 if theta == 0.0 else abs(rate - expected) <= tolerance
            results.append(ValidationResult(suite=ValidationSuite.LSH.value, check="theta=%.4f" % theta, passed=passed,
                                            detail="disagreement %.5f, expected %.5f +- %s" % (rate, expected, tolerance)))
        return results

    @staticmethod
    def disagreement_rate(hasher: SimHasher, theta: float) -> float:
        x = np.array([1.0, 0.0])
        y = np.array([math.cos(theta), math.sin(theta)])
        return float(np.mean(hasher.hash(x).bits != hasher.hash(y).bits))

    # SKETCH

    def overcount_rate(self, primes: tuple[int, ...], nb_inserted: int, nb_trials: int, rng: np.random.Generator) -> float:
        """
        Monte Carlo estimate of the probability that a never-inserted key has a positive count after nb_inserted
        insertions of uniformly hashed keys.
        """
        sketch = CountMinSketch(primes=primes)
        nb_overcounts = 0
        chunk_size = 1000
        for start in range(0, nb_trials, chunk_size):
            nb_chunk_trials = min(chunk_size, nb_trials - start)
            inserted = sketch.row_indices_of_many(rng.integers(0, 2 ** 64 - 1, size=(nb_chunk_trials, nb_inserted), dtype=np.uint64, endpoint=True))
            fresh = sketch.row_indices_of_many(rng.integers(0, 2 ** 64 - 1, size=nb_chunk_trials, dtype=np.uint64, endpoint=True))
            # the fresh key is over-counted iff each of its cells was hit by some inserted key
            overcounted = np.ones(nb_chunk_trials, dtype=bool)
            for row in range(sketch.get_nb_rows()):
                overcounted &= (inserted[row] == fresh[row][:, np.newaxis]).any(axis=1)
            nb_overcounts += int(overcounted.sum())
        return nb_overcounts / nb_trials

    @staticmethod
    def overcount_tolerance(expected: float, nb_trials: int, nb_standard_errors: float) -> float:
        """
        nb_standard_errors binomial standard errors around the expected over-count rate, but never less than one
        hit out of nb_trials: rates far below 1 / nb_trials cannot be estimated any finer by nb_trials trials.
        """
        standard_error = math.sqrt(expected * (1.0 - expected) / nb_trials)
        return max(nb_standard_errors * standard_error, 1.0 / nb_trials)

    def validate_sketch_theory(self, nb_trials: int = 10_000, nb_standard_errors: float = 3.0,
                               nb_rows_list: tuple[int, ...] = (1, 2, 4, 6),
                               load_ratios: tuple[float, ...] = (0.05, 0.1, 0.5)) -> list[ValidationResult]:
        rng = new_generator(self.seed)
        results = []
        for nb_rows in nb_rows_list:
            primes = PRIMES_6K[:nb_rows]
            mean_prime = float(np.mean(primes))
            for load_ratio in load_ratios:
                nb_inserted = int(round(load_ratio * mean_prime))
                expected = CountMinSketch.overcount_probability(nb_inserted=nb_inserted, primes=primes)
                rate = self.overcount_rate(primes=primes, nb_inserted=nb_inserted, nb_trials=nb_trials, rng=rng)
                tolerance = Validation.overcount_tolerance(expected=expected, nb_trials=nb_trials, nb_standard_errors=nb_standard_errors)
                results.append(ValidationResult(suite=ValidationSuite.SKETCH.value, check="l=%s N/p=%s" % (nb_rows, load_ratio),
                                                passed=abs(rate - expected) <= tolerance,
                                                detail="over-count %.6f, theory %.6f +- %.6f" % (rate, expected, tolerance)))
        return results

    def validate_never_undercount(self, nb_increments: int = 1_000_000, nb_keys: int = 5000,
                                  sequence_length: int = 10_000) -> ValidationResult:
        rng = new_generator(self.seed)
        keys = [CountKey.encode(code=np.array([index])) for index in range(nb_keys)]
        nb_violations = 0
        nb_sequences = max(nb_increments // sequence_length, 1)
        for _ in range(nb_sequences):
            sketch = CountMinSketch(primes=PRIMES_6K)
            exact = ExactCounter()
            for index in rng.integers(0, nb_keys, size=sequence_length):
                sketch.increment(key=keys[index])
                exact.increment(key=keys[index])
            nb_violations += sum(1 for key in keys if sketch.query(key=key) < exact.query(key=key))
        return ValidationResult(suite=ValidationSuite.SKETCH.value, check="never under-counts", passed=nb_violations == 0,
                                detail="%s violations over %s increments" % (nb_violations, nb_sequences * sequence_length))

    # GRADIENTS

    @staticmethod
    def random_small_model(rng: np.random.Generator, seed: int) -> AutoencoderModel:
        input_dim = int(rng.integers(1, 4))
        hidden_sizes = [int(rng.integers(1, 4))] if rng.random() < 0.5 else []
        model = AutoencoderModel(input_dim=input_dim, hidden_sizes=hidden_sizes, code_dim=int(rng.integers(1, 4)),
                                 noise_amplitude=0.3, binarization_weight=float(rng.uniform(0.0, 10.0)), seed=seed)
        for bias in model.biases:
            bias[:] = rng.normal(scale=0.5, size=bias.shape)
        return model

    @staticmethod
    def max_relative_error(model: AutoencoderModel, batch: TrainBatch, noise: np.ndarray, step: float = 1e-5) -> float:
        analytic = model.grad(batch=batch, noise=noise)
        worst = 0.0
        for parameter, gradient in zip(model.get_parameters(), analytic):
            for index in np.ndindex(parameter.shape):
                original = parameter[index]
                parameter[index] = original + step
                loss_plus = model.loss(batch=batch, noise=noise)
                parameter[index] = original - step
                loss_minus = model.loss(batch=batch, noise=noise)
                parameter[index] = original
                numeric = (loss_plus - loss_minus) / (2.0 * step)
                error = abs(gradient[index] - numeric) / max(abs(gradient[index]), abs(numeric), 1e-5)
                worst = max(worst, error)
        return worst

    def validate_gradients(self, nb_models: int = 20, tolerance: float = 1e-4) -> list[ValidationResult]:
        rng = new_generator(self.seed)
        worst = 0.0
        for index in range(nb_models):
            model = Validation.random_small_model(rng=rng, seed=self.seed + index)
            batch = TrainBatch(inputs=rng.random((3, model.input_dim)))
            noise = model.sample_noise(nb_samples=len(batch), rng=rng)
            worst = max(worst, Validation.max_relative_error(model=model, batch=batch, noise=noise))
        return [ValidationResult(suite=ValidationSuite.GRADCHECK.value, check="%s random models" % nb_models, passed=worst < tolerance,
                                 detail="max relative error %.2e (tolerance %.0e)" % (worst, tolerance))]

    # BINARIZATION

    @staticmethod
    def toy_images(rng: np.random.Generator, nb_images: int = 8, nb_pixels: int = 16) -> np.ndarray:
        return (rng.random((nb_images, nb_pixels)) < 0.5).astype(np.float64)

    def saturated_fraction(self, nb_steps: int = 4000, learning_rate: float = 0.01, margin: float = 0.05) -> float:
        rng = new_generator(self.seed)
        images = Validation.toy_images(rng=rng)
        model = AutoencoderModel(input_dim=images.shape[1], hidden_sizes=[16], code_dim=8, noise_amplitude=0.3,
                                 binarization_weight=10.0, seed=self.seed)
        optimizer = model.new_optimizer()
        batch = TrainBatch(inputs=images)
        for _ in range(nb_steps):
            model.train_step(batch=batch, optimizer=optimizer, learning_rate=learning_rate, rng=rng)
        codes = model.encode(x=images)
        return float(np.mean((codes < margin) | (codes > 1.0 - margin)))

    def validate_binarization(self, threshold: float = 0.9) -> list[ValidationResult]:
        fraction = self.saturated_fraction()
        return [ValidationResult(suite=ValidationSuite.BINARIZATION.value, check="lambda=10, 8 images", passed=fraction >= threshold,
                                 detail="%.1f%% of the code units within 0.05 of {0, 1}" % (100 * fraction))]

    # SPEED

    def increments_per_second(self, counter, keys: list[CountKey]) -> float:
        with TimeMeasurer() as time_measurer:
            for key in keys:
                counter.increment(key=key)
        return len(keys) / max(time_measurer.get_measure() / 1000.0, 1e-9)

    def validate_speed(self, nb_increments: int = 100_000) -> list[ValidationResult]:
        rng = new_generator(self.seed)
        keys = [CountKey.encode(code=np.array([value])) for value in rng.integers(0, nb_increments, size=nb_increments)]
        exact_speed = self.increments_per_second(counter=ExactCounter(), keys=keys)
        sketch_speed = self.increments_per_second(counter=CountMinSketch(primes=CountMinSketch.primes_of(prime_set=PrimeSet.SIX_M)), keys=keys)
        return [ValidationResult(suite=ValidationSuite.SPEED.value, check="exact vs count-min", passed=True,
                                 detail="exact %.0f/s, count-min %.0f/s, ratio %.2f" % (exact_speed, sketch_speed, exact_speed / sketch_speed))]

    # REPORT

    def run(self, suite: ValidationSuite) -> list[ValidationResult]:
        results = []
        if suite in (ValidationSuite.LSH, ValidationSuite.ALL):
            results.extend(self.validate_lsh())
        if suite in (ValidationSuite.SKETCH, ValidationSuite.ALL):
            results.extend(self.validate_sketch_theory())
            results.append(self.validate_never_undercount())
        if suite in (ValidationSuite.GRADCHECK, ValidationSuite.ALL):
            results.extend(self.validate_gradients())
        if suite in (ValidationSuite.BINARIZATION, ValidationSuite.ALL):
            results.extend(self.validate_binarization())
        if suite == ValidationSuite.SPEED:
            results.extend(self.validate_speed())
        for result in results:
            log.debug("%s / %s: %s (%s)", result.suite, result.check, result.passed, result.detail)
        return results

    @staticmethod
    def report(results: list[ValidationResult], use_color: bool | None = None) -> str:
        if use_color is None:
            use_color = "NO_COLOR" not in os.environ
        table = pd.DataFrame([{"suite": result.suite, "check": result.check, "result": "PASS" if result.passed else "FAIL",
                               "detail": result.detail} for result in results], columns=["suite", "check", "result", "detail"])
        text = table.to_string(index=False, justify="left")
        if use_color:
            text = text.replace("PASS", GREEN + "PASS" + RESET).replace("FAIL", RED + "FAIL" + RESET)
        return text

    @staticmethod
    def all_passed(results: list[ValidationResult]) -> bool:
        return all(result.passed for result in results)
