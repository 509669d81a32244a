"""
Module level defaults. Every value can be overridden per call.
"""

import os

from rpbis.exceptions import ConfigError

# Seed used by the random generator and the self-test
DEFAULT_SEED = 20150601

# Environment variable overriding DEFAULT_SEED
SEED_ENV_VAR = "RPBIS_SEED"

# Upper bound on formulas materialised for a single Phi-set
MAX_PHI_SET_SIZE = 200_000

# Largest union of children handled by the symbolic Phi-and counter
MAX_SYMBOLIC_CHILDREN = 16

DEFAULT_CASES = 200

DEFAULT_WORKERS = 4


def default_seed() -> int:
    """
    Seed taken from the ``RPBIS_SEED`` environment variable, else `DEFAULT_SEED`.
    """
    raw = os.environ.get(SEED_ENV_VAR)
    if raw is None or not raw.strip():
        return DEFAULT_SEED
    try:
        return int(raw.strip())
    except ValueError:
        raise ConfigError(f"{SEED_ENV_VAR} must be an integer, got {raw!r}") from None
