"""Tunable constants shared across regdepth.

Search budgets are counted in candidates examined, not in time, so
results stay reproducible for a fixed seed."""

import os
from fractions import Fraction

from regdepth.exceptions import InputError

# sampling constant c in |S| >= c * eps^-2 * ln(1/eps)
SAMPLE_CONSTANT = 8

# documented failure probability of a uniform sample of that size
SAMPLE_FAILURE_BOUND = Fraction(1, 10)

HAM_SANDWICH_BUDGET = 400000
SIX_SECTOR_DIRECTIONS = 720
TVERBERG_REPAIR_BUDGET = 20000
CENTERPOINT_ROUNDS = 60
CENTERPOINT_SEED_DIRECTIONS = 3000
HEURISTIC_BUDGET = 2000

# r31-lower-bound generator: slope spread and crossing spread inside a group
R31_TILT = Fraction(1, 100)
R31_SPACING = Fraction(1, 1000)

# rows of the candidate sign matrix counted per block
CHUNK_ROWS = 2048

SVG_SIZE = 800
JSON_SCHEMA = 1

SEED_ENV = 'REGDEPTH_SEED'

def default_seed():
    """Seed used when none is given: $REGDEPTH_SEED, or 0."""

    value = os.environ.get(SEED_ENV)
    if value is None or value.strip() == '':
        return 0
    try:
        return int(value)
    except ValueError:
        raise InputError("Error! {0} must be an integer, got {1!r}".format(SEED_ENV, value))
