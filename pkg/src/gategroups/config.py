"""Capacity limits, overridable through GATEGROUPS_* environment variables.

Limits exist to fail fast with a clear error instead of thrashing; they are
not correctness knobs.  Every value can be raised for bigger experiments,
e.g. ``GATEGROUPS_MAX_CLOSURE=500000``.
"""

from __future__ import annotations

import os

_DEFAULTS = {
    # element budget for matrix-group closure
    "MAX_CLOSURE": 200_000,
    # element budget for enumeration-based structure computations
    "MAX_ENUMERATION": 200_000,
    # largest order accepted by the isomorphism test
    "MAX_ISO_ORDER": 20_000,
    # automorphism-group tiers (required / extended)
    "MAX_AUT_ORDER": 128,
    "MAX_AUT_ORDER_EXTENDED": 8_192,
    # commutator-set all-pairs tiers (required / extended)
    "MAX_COMMUTATOR_ORDER": 4_096,
    "MAX_COMMUTATOR_ORDER_EXTENDED": 20_000,
    # node budget for backtracking searches (automorphisms, complements)
    "SEARCH_NODE_BUDGET": 50_000_000,
}


def limit(name: str) -> int:
    """Return the configured value for one of the capacity limits."""
    if name not in _DEFAULTS:
        raise KeyError(f"unknown limit {name!r}")
    raw = os.environ.get(f"GATEGROUPS_{name}")
    if raw is not None:
        return int(raw)
    return _DEFAULTS[name]


def long_tests_enabled() -> bool:
    return os.environ.get("GATEGROUPS_LONG", "") not in ("", "0")
