import logging

# Log level for the feature
LOG_LEVEL = logging.INFO

# Dataset CSV layout: feature columns carry this prefix, the last column holds the ranking
FEATURE_PREFIX = "f:"
RANKING_COLUMN = "ranking"
RANKING_SEPARATOR = ">"
ENCODING = "utf-8"

# Significant digits of every number in curve output
SIGNIFICANT_DIGITS = 6

# Curve output columns (JSON uses the same field names)
CURVE_COLUMNS = ("method", "fold", "q", "completeness", "correctness", "n_evaluated")
INSTANCE_COLUMNS = ("method", "fold", "instance", "q", "completeness", "correctness", "effective_q", "repaired")

# Synthetic generator defaults
DEFAULT_SYNTH_THETA = 2.0
DEFAULT_SYNTH_WEIGHT_SCALE = 1.0
DEFAULT_SYNTH_REGIONS = 4
