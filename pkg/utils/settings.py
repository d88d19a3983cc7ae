"""Default budgets and the single environment override."""

import os

DEFAULT_SEED = 1
DEFAULT_TRIALS = 200
DEFAULT_SAMPLES = 200
MAX_ORACLE_DIM = 256

SEED_VARIABLE = "SUPERMORITA_SEED"


def default_seed():
    """Seed used when --seed is absent: $SUPERMORITA_SEED if set, else DEFAULT_SEED."""
    value = os.environ.get(SEED_VARIABLE)
    if value is None or not value.strip():
        return DEFAULT_SEED
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"{SEED_VARIABLE} must be an integer, got '{value}'") from None
