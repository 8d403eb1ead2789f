"""Configuration constants for the interpolation workbench."""

import os

from dotenv import load_dotenv

load_dotenv()


def _env_int(name: str, default: int) -> int:
    """Read an integer override from the environment."""
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"Environment variable {name} must be an integer, got {raw!r}") from exc


class Config:
    """Resource caps and defaults (override with WORKBENCH_* environment variables)."""
    MAX_DERIVED_CLAUSES = _env_int("WORKBENCH_MAX_DERIVED_CLAUSES", 100_000)
    MAX_COUNTERMODEL_DOMAIN = _env_int("WORKBENCH_MAX_COUNTERMODEL_DOMAIN", 8)
    COUNTER_MAX_BITS = _env_int("WORKBENCH_COUNTER_MAX_BITS", 8)
    GOAL_FAMILY_MAX_DEPTH = _env_int("WORKBENCH_GOAL_FAMILY_MAX_DEPTH", 4)
    ALCO_MAX_INDIVIDUALS = _env_int("WORKBENCH_ALCO_MAX_INDIVIDUALS", 4)
    MAX_TYPES = _env_int("WORKBENCH_MAX_TYPES", 20_000)
    MAX_MOSAIC_BRANCHES = _env_int("WORKBENCH_MAX_MOSAIC_BRANCHES", 20_000)
    MAX_MOSAICS = _env_int("WORKBENCH_MAX_MOSAICS", 250_000)
    UNROLL_VERIFY_DEPTH = _env_int("WORKBENCH_UNROLL_VERIFY_DEPTH", 3)
    PRUNE_SIZE_LIMIT = _env_int("WORKBENCH_PRUNE_SIZE_LIMIT", 400)
    LP_MAX_ATOMS = _env_int("WORKBENCH_LP_MAX_ATOMS", 10)
    LOG_LEVEL = os.environ.get("WORKBENCH_LOG_LEVEL", "WARNING")

    # SAT backend name understood by pysat.solvers.Solver
    SAT_SOLVER = os.environ.get("WORKBENCH_SAT_SOLVER", "g3")

    # Exit codes of the command line front end
    EXIT_OK = 0
    EXIT_NEGATIVE = 1
    EXIT_USAGE = 2
    EXIT_RESOURCE = 3
