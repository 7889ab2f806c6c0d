import math
from typing import Any

import numpy as np

from utils.ErrorKind import ErrorKind
from utils.ExplorationError import ExplorationError

MASK_64 = 2 ** 64 - 1


# ASSERTIONS

def is_not_empty(variable: Any) -> bool:
    if isinstance(variable, int) or isinstance(variable, float):
        return True
    elif isinstance(variable, str):
        return variable != ""
    elif isinstance(variable, (list, tuple, dict, set)):
        return len(variable) > 0
    elif isinstance(variable, np.ndarray):
        return variable.size > 0
    else:
        # no clue about the variable type
        # thus, we only check whether it is None
        return variable is not None


def check_finite(values: np.ndarray, what: str) -> None:
    if not np.all(np.isfinite(values)):
        raise ExplorationError(ErrorKind.NON_FINITE_INPUT, "The " + what + " contains non-finite values.")


def as_real_vector(x: Any, expected_length: int, what: str) -> np.ndarray:
    vector = np.asarray(x, dtype=np.float64)
    if vector.ndim != 1 or vector.shape[0] != expected_length:
        raise ExplorationError(ErrorKind.DIMENSION_MISMATCH,
                               "The %s has shape %s, expected a vector of length %s." % (what, vector.shape, expected_length))
    check_finite(values=vector, what=what)
    return vector


# PRIMES

def is_prime(number: int) -> bool:
    if number < 2:
        return False
    if number % 2 == 0:
        return number == 2
    divisor = 3
    while divisor * divisor <= number:
        if number % divisor == 0:
            return False
        divisor += 2
    return True


def largest_primes_below(bound: int, count: int) -> tuple[int, ...]:
    primes = []
    candidate = bound - 1
    while len(primes) < count and candidate >= 2:
        if is_prime(candidate):
            primes.append(candidate)
        candidate -= 1
    return tuple(sorted(primes))


# SEEDS

def mix64(value: int) -> int:
    """
    The SplitMix64 finalizer: a bijective 64-bit mixing function.
    :param value: An integer (reduced modulo 2^64).
    :return: An integer in [0, 2^64).
    """
    z = (value + 0x9E3779B97F4A7C15) & MASK_64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK_64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK_64
    return z ^ (z >> 31)


def derive_seed(master_seed: int, index: int) -> int:
    """
    Derive the seed of a sweep cell (or of a replica) from the master seed and its index.
    Adding cells never changes the seeds of the existing ones.
    """
    return mix64(mix64(master_seed & MASK_64) ^ (index & MASK_64))


def new_generator(seed: int | list[int]) -> np.random.Generator:
    # the documented generator of the whole project: PCG64
    return np.random.Generator(np.random.PCG64(seed))


# PARSING

def parse_bool(value: str) -> bool:
    normalized = value.strip().lower()
    if normalized in ("true", "yes", "1"):
        return True
    elif normalized in ("false", "no", "0"):
        return False
    raise ValueError("'" + value + "' is not a boolean (true/false)")


def parse_int_list(value: str) -> list[int]:
    return [int(element) for element in value.split(",") if element.strip() != ""]


def parse_float_list(value: str) -> list[float]:
    return [float(element) for element in value.split(",") if element.strip() != ""]


def format_value(value: Any) -> str:
    # canonical textual form of config values (round-trips through the parsers above)
    if isinstance(value, bool):
        return "true" if value else "false"
    elif isinstance(value, float):
        return repr(value)
    elif isinstance(value, (list, tuple)):
        return ",".join(format_value(element) for element in value)
    else:
        return str(value)


# STATISTICS

def median_with_inf(values: list[float]) -> float:
    # seeds that never reached the goal contribute +inf, so the median exceeds the budget when most of them fail
    if len(values) == 0:
        return math.inf
    return float(np.median(np.asarray(values, dtype=np.float64)))
