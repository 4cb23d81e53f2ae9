import logging

# Log level for the feature
LOG_LEVEL = logging.INFO

# Upper bound on the Mallows spread. At M <= 10 a spread of 20 is numerically
# indistinguishable from the one-point distribution on the center.
THETA_MAX = 20.0

# Bisection tolerance when solving the Mallows moment equation for theta
THETA_XTOL = 1e-12

# Plackett-Luce weights are clamped to this floor (then renormalised)
WEIGHT_FLOOR = 1e-9

# Minorization-maximization stopping rule for the Plackett-Luce fit
PL_TOLERANCE = 1e-8
PL_MAX_ITERATIONS = 10_000

# Number of Mallows (theta, M) gap-marginal tables kept in memory
MARGINAL_CACHE_SIZE = 4096
