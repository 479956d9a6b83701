"""Centralised configuration for heiscat.

Values come from the environment (optionally seeded from a ``.env`` file in
the working directory).  Everything has a default so the library works with
no configuration at all.
"""
import os

from dotenv import load_dotenv

# Must run before the module-level reads below.
load_dotenv()

# Largest basis any single computation may enumerate explicitly
# (explicit bimodules, oracle slices, PBW truncations, word generators).
SIZE_CAP = int(os.environ.get("HEISCAT_SIZE_CAP", "5000"))

# Worker processes used by the suite runner; 1 runs every case inline.
WORKERS = int(os.environ.get("HEISCAT_WORKERS", "1"))

# Seed for randomized property cases when the CLI is not given --seed.
DEFAULT_SEED = int(os.environ.get("HEISCAT_SEED", "20240501"))

LOG_LEVEL = os.environ.get("HEISCAT_LOG_LEVEL", "INFO").upper()
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
LOG_DATEFMT = "%H:%M:%S"

# Ambient region labels used when a check is not given an explicit range.
DEFAULT_LABELS = (0, 1, 2, 3)

# Builtin algebras whose basis is large enough that checks use fewer labels.
LARGE_ALGEBRA_DIM = 4
