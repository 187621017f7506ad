# Copyright (C) 2024 The fermatpy developers
#
# SPDX-License-Identifier: MIT

import logging
import os

from .errors import ConfigurationError

SUPPORTED_PRIMES = (3, 5, 7, 11, 13)

DEFAULT_POINT_COUNT_CAP = 2_000_000
DEFAULT_LOG_LEVEL = "WARNING"
DEFAULT_SEED = 0

# sample sizes of the randomized acceptance checks
DEFAULT_HOMOMORPHISM_PAIRS = 200
DEFAULT_D2_INSTANCES = 100
DEFAULT_ANNIHILATION_TUPLES = 100

LOG_FORMAT = "[%(asctime)s] [%(levelname)s]: %(message)s"


def _read_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(f"{name} must be an integer, found {raw!r}") from None
    if value < 0:
        raise ConfigurationError(f"{name} must be non-negative, found {value}")
    return value


def point_count_cap() -> int:
    """Maximal number of affine pairs visited by a single point count (FERMATPY_POINT_COUNT_CAP)."""
    cap = _read_int("FERMATPY_POINT_COUNT_CAP", DEFAULT_POINT_COUNT_CAP)
    if cap == 0:
        raise ConfigurationError("FERMATPY_POINT_COUNT_CAP must be positive")
    return cap


def default_seed() -> int:
    return _read_int("FERMATPY_SEED", DEFAULT_SEED)


def homomorphism_pairs() -> int:
    """Random pairs (q1, q2) checked against B_(q1+q2) = B_q1 B_q2 (FERMATPY_HOMOMORPHISM_PAIRS)."""
    return _read_int("FERMATPY_HOMOMORPHISM_PAIRS", DEFAULT_HOMOMORPHISM_PAIRS)


def d2_instances() -> int:
    return _read_int("FERMATPY_D2_INSTANCES", DEFAULT_D2_INSTANCES)


def annihilation_tuples() -> int:
    return _read_int("FERMATPY_ANNIHILATION_TUPLES", DEFAULT_ANNIHILATION_TUPLES)


def log_level() -> int:
    name = os.environ.get("FERMATPY_LOG_LEVEL", DEFAULT_LOG_LEVEL).strip().upper()
    level = logging.getLevelName(name)
    if not isinstance(level, int):
        raise ConfigurationError(f"FERMATPY_LOG_LEVEL: unknown logging level {name!r}")
    return level
