import logging

# Log level for the feature
LOG_LEVEL = logging.INFO

# Largest label count for which exhaustive enumeration of all rankings is allowed.
# 9! = 362,880 rankings keeps the exact oracles sub-second.
ENUMERATION_CAP = 9

# Default number of sampled triples for the transposition property check
TRANSPOSITION_CHECK_SAMPLES = 1000

# Tolerance used when a valued relation is checked for reciprocity
RECIPROCITY_TOLERANCE = 1e-12
