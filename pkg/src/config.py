# src/config.py
import os

from dotenv import load_dotenv

load_dotenv()

# Default modulus: the Mersenne prime 2^31 - 1
DEFAULT_PRIME = int(os.getenv("NLCODIM_PRIME", "2147483647"))

DEFAULT_SEED = int(os.getenv("NLCODIM_SEED", "0"))

# Resampling budget for witness certification
MAX_ATTEMPTS = int(os.getenv("NLCODIM_MAX_ATTEMPTS", "16"))

LOG_LEVEL = os.getenv("NLCODIM_LOG_LEVEL", "WARNING").upper()

# Residues must stay below 2^31 so that products fit in int64 matrix entries
if not 2 <= DEFAULT_PRIME < 2**31:
    raise ValueError("NLCODIM_PRIME must lie in [2, 2^31)")

if MAX_ATTEMPTS < 1:
    raise ValueError("NLCODIM_MAX_ATTEMPTS must be at least 1")

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

if LOG_LEVEL not in LOG_LEVELS:
    raise ValueError(f"NLCODIM_LOG_LEVEL must be one of {', '.join(LOG_LEVELS)}")
