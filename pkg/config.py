"""
Configuration file for the Conifold Fano Toolkit
"""
import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

# Project paths
BASE_DIR = Path(__file__).parent
DATASET_PATH = Path(os.getenv("CONIFOLD_DATASET", BASE_DIR / "dataset" / "conifold_166.poly"))

# Logging
LOG_LEVEL = os.getenv("CONIFOLD_LOG_LEVEL", "WARNING")

# Worker pool for scan / verify (1 = run in-process)
DEFAULT_JOBS = int(os.getenv("CONIFOLD_JOBS", "1"))

# Series settings
DEFAULT_MAX_DEGREE = 20
GOLDEN_MAX_KAPPA = 8
SERIES_CACHE_SIZE = 64

# D3 operator shape: t^0 .. t^J, each P_j of degree <= 3
FIT_TAIL_DEGREE = 4
FIT_MIN_DEGREE = 4 * FIT_TAIL_DEGREE + 9
FIT_WINDOW_EXTRA = 12  # fitting rows m = 1 .. 4J + 12

# Result records
RECORD_FORMAT_VERSION = 1
RECORD_HEADER = f"#conifold-records v{RECORD_FORMAT_VERSION}"
