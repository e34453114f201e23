"""Shared fixtures, the small-group corpus, and independent oracles.

The oracles here are deliberately primitive (plain breadth-first set
closures over permutation tuples) so they share no code path with the
stabilizer chain or the element-table engine they cross-check.
"""

import os

import pytest

from gategroups import groups
from gategroups.perm import PermGroup, Permutation


def pytest_collection_modifyitems(config, items):
    if os.environ.get("GATEGROUPS_LONG", "") not in ("", "0"):
        return
    skip = pytest.mark.skip(reason="long tier; enable with GATEGROUPS_LONG=1")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)


def brute_force_elements(group: PermGroup):
    """All elements as image tuples, by naive closure (oracle)."""
    gens = [g.imgs for g in group.generators]
    ident = tuple(range(group.degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[v] for v in x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def small_corpus():
    """Groups used by the always-on property suites (orders <= 5000)."""
    return [
        ("Z12", groups.cyclic(12)),
        ("V4", groups.direct(groups.cyclic(2), groups.cyclic(2))),
        ("S3", groups.symmetric(3)),
        ("S4", groups.symmetric(4)),
        ("S5", groups.symmetric(5)),
        ("S6", groups.symmetric(6)),
        ("A4", groups.alternating(4)),
        ("A5", groups.alternating(5)),
        ("A6", groups.alternating(6)),
        ("D8", groups.dihedral(8)),
        ("D12", groups.dihedral(12)),
        ("Q8", groups.quaternion8()),
        ("SL23", groups.sl23()),
        ("Z2wrS3", groups.wreath(groups.cyclic(2), groups.symmetric(3))),
        ("Z2wrS4", groups.wreath(groups.cyclic(2), groups.symmetric(4))),
        ("Z3xS4", groups.direct(groups.cyclic(3), groups.symmetric(4))),
    ]
