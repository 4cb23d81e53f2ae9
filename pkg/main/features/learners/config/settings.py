import logging

# Log level for the feature
LOG_LEVEL = logging.INFO

# Defaults for the instance-based learners
DEFAULT_K = 10
DEFAULT_ENSEMBLE_SIZE = 10
DEFAULT_SEED = 0
