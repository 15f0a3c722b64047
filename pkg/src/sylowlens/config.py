"""Runtime caps for element enumeration and subgroup-lattice work.

All caps are soft safety limits: exceeding one raises ``CapExceeded`` so the
caller can fall back to chain-based methods or record a skip. Defaults are
sized for desk-scale groups; the environment variables below override them
per process.
"""

from __future__ import annotations

import os

DEFAULT_ENUMERATION_CAP = 20000
DEFAULT_LATTICE_CAP = 400
DEFAULT_SUBGROUP_COUNT_CAP = 1500

ENV_LATTICE_CAP = "SYLOWLENS_LATTICE_CAP"
ENV_SUBGROUP_COUNT_CAP = "SYLOWLENS_SUBGROUP_CAP"


class CapExceeded(RuntimeError):
    """A configured enumeration or lattice cap was exceeded."""


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


def enumeration_cap() -> int:
    """Maximum number of elements ``elements()`` will materialize."""
    return DEFAULT_ENUMERATION_CAP


def lattice_cap() -> int:
    """Maximum group order for full subgroup-lattice enumeration."""
    return _env_int(ENV_LATTICE_CAP, DEFAULT_LATTICE_CAP)


def subgroup_count_cap() -> int:
    """Maximum number of distinct subgroups a lattice build may discover.

    Guards against groups whose order is under the lattice cap but whose
    subgroup count explodes (large elementary abelian 2-groups). Scans treat
    the resulting ``CapExceeded`` as a recorded per-group skip.
    """
    return _env_int(ENV_SUBGROUP_COUNT_CAP, DEFAULT_SUBGROUP_COUNT_CAP)
