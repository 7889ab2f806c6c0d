from enum import Enum


class ErrorKind(Enum):
    # core hashing
    INVALID_DIMENSION = "invalid-dimension"
    DIMENSION_MISMATCH = "dimension-mismatch"
    NON_FINITE_INPUT = "non-finite-input"
    SHAPE_NOT_DIVISIBLE = "shape-not-divisible"
    INTENSITY_OUT_OF_RANGE = "intensity-out-of-range"
    NON_POSITIVE_GRID_SIZE = "non-positive-grid-size"
    EMPTY_CODE = "empty-code"
    # counting
    COUNT_OVERFLOW = "count-overflow"
    ZERO_COUNT = "zero-count"
    MISSING_ACTION = "missing-action"
    INVALID_PRIMES = "invalid-primes"
    PHASE_VIOLATION = "phase-violation"
    SNAPSHOT_INVALID = "snapshot-invalid"
    # autoencoder
    NOISE_TOO_SMALL = "noise-too-small"
    EMPTY_BATCH = "empty-batch"
    INVALID_LEARNING_RATE = "invalid-learning-rate"
    # environments
    INVALID_SIZE = "invalid-size"
    UNREACHABLE_GOAL = "unreachable-goal"
    INVALID_RADIUS = "invalid-radius"
    STEP_AFTER_DONE = "step-after-done"
    STEP_BEFORE_RESET = "step-before-reset"
    INVALID_ACTION = "invalid-action"
    # agents and harness
    BONUS_LEAKAGE = "bonus-leakage"
    CONFIG_INVALID = "config-invalid"
