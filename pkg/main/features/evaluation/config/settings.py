import logging

import numpy as np

# Log level for the feature
LOG_LEVEL = logging.INFO

# Default threshold grid: 0.5 to 0.95 in steps of 0.05
DEFAULT_Q_GRID = tuple(float(q) for q in np.round(np.arange(0.5, 0.95 + 1e-9, 0.05), 10))

DEFAULT_FOLDS = 5
