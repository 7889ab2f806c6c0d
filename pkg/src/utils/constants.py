# Count-Min sketch primes, "6M" set (the six largest primes below 10^6)
PRIMES_6M = (999931, 999953, 999959, 999961, 999979, 999983)
# "90M" set: six primes of approximately 15M each, computed (see utils.largest_primes_below)
PRIMES_90M_BOUND = 15_000_000
# scaled-down set for statistical tests (the six largest primes below 10^3)
PRIMES_6K = (967, 971, 977, 983, 991, 997)
NB_PRIMES_PER_SET = 6

MAX_COUNT = 2 ** 64 - 1

# binary layouts (little-endian), see counting/CounterSnapshot.py and autoencoder/AutoencoderModel.py
COUNTER_MAGIC = b"HCNT"
COUNTER_FORMAT_VERSION = 1
AUTOENCODER_MAGIC = b"HBAE"
AUTOENCODER_FORMAT_VERSION = 1

# autoencoder
MIN_NOISE_AMPLITUDE = 0.25
CODE_CLAMP_EPSILON = 1e-6
ADAM_BETA1 = 0.9
ADAM_BETA2 = 0.999
ADAM_EPSILON = 1e-8

# point mass environment
POINT_MASS_START = (-0.9, -0.9)
POINT_MASS_GOAL = (0.9, 0.9)
POINT_MASS_THRUST = 0.05
POINT_MASS_MAX_SPEED = 0.2
POINT_MASS_HORIZON = 200

# gridworld occupancy image
AGENT_INTENSITY = 255
WALL_INTENSITY = 128
MAX_INTENSITY = 255

# metrics CSV (schema version 1)
METRICS_SCHEMA_VERSION = 1
METRICS_COLUMNS = ["iteration", "seed", "mean_true_return", "mean_bonus", "distinct_keys", "counter_bytes", "ae_loss"]
TIMING_COLUMNS = ["iteration", "seed", "wall_ms"]
CSV_FLOAT_FORMAT = "%.9g"
METRICS_FILENAME = "metrics.csv"
TIMING_FILENAME = "timing.csv"
COMPARISON_FILENAME = "comparison.csv"
RUN_INFO_FILENAME = "run-info.ini"
# per-seed checkpoints, "%s" being the seed
COUNTER_CHECKPOINT_FILENAME = "counter-%s.bin"
AUTOENCODER_CHECKPOINT_FILENAME = "autoencoder-%s.bin"
STATE_CHECKPOINT_FILENAME = "state-%s.pkl"

DEFAULT_CONFIG_SECTION = "experiment"

# exit codes of the command-line interface
EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_CONFIG_ERROR = 2
