# -*- coding: utf-8 -*-
"""Configuration from environment variables."""

import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()


RESULTS_PATH = Path(os.environ.get("CMQM_RESULTS_PATH", "./results"))

LOG_LEVEL = os.environ.get("CMQM_LOG_LEVEL", "INFO")
LOG_FILE = os.environ.get("CMQM_LOG_FILE") or None

DEFAULT_MU = int(os.environ.get("CMQM_DEFAULT_MU", "8"))
MAX_MU = int(os.environ.get("CMQM_MAX_MU", "128"))

# Width in bits of the energy-tag register used by the Diophantine evolution
TAG_WIDTH = int(os.environ.get("CMQM_TAG_WIDTH", "64"))

# Largest Dense unitary accepted (exact-rational products grow as d^3)
MAX_DENSE_DIM = int(os.environ.get("CMQM_MAX_DENSE_DIM", "64"))

# Cap on codeword length for the prefix-free program enumeration
MAX_PREFIX_FREE_L = int(os.environ.get("CMQM_MAX_PREFIX_FREE_L", "24"))

# Max worker processes for independent trials
TRIAL_WORKERS = int(os.environ.get("CMQM_TRIAL_WORKERS", "1"))

ENGINE_VERSION = "0.1.0"
