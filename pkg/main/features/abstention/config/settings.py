import logging

# Log level for the feature
LOG_LEVEL = logging.INFO

# Pairwise degrees within this distance of 1/2 are snapped to exactly 1/2
# before thresholding, so rounding noise cannot create a pair of opposite edges.
TIE_SNAP_TOLERANCE = 1e-12

# Admissible threshold range: 1/2 <= q < 1
THRESHOLD_MIN = 0.5
THRESHOLD_SUPREMUM = 1.0
