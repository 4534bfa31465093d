"""Shared search-size limits for the enumeration routines."""

from __future__ import annotations

import os

DEFAULT_SEARCH_CAP = 10**7


class SearchCapError(RuntimeError):
    """Raised when a backtracking search exceeds its node budget."""


def search_cap(explicit: int | None = None) -> int:
    """Resolve a node budget: explicit argument, QUANDLE_SEARCH_CAP, or default."""
    if explicit is not None:
        return explicit
    env = os.environ.get("QUANDLE_SEARCH_CAP")
    if env is not None:
        return int(env)
    return DEFAULT_SEARCH_CAP
