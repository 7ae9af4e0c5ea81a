"""Ground-truth checks against brute force enumeration.

Everything here is deliberately naive: trees are enumerated by filtering
all (n-1)-subsets of the edge universe, and listing properties are
checked from first principles on materialized edge sets.  The ground
truth never comes from the generation engines, so these stay meaningful
as oracles for them.  All entry points refuse to run past a cap
(default n = 14, about 1.5M candidate subsets).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Optional

from .core import edge_universe, is_spanning_tree, path_tree
from .engine import list_stream
from .greedy import greedy_events, greedy_listing

DEFAULT_CAP = 14


@dataclass
class ListingReport:
    """Outcome of the structural checks on one listing."""

    length: int
    is_gray: Optional[bool] = None
    first_violation: Optional[int] = None
    is_exhaustive: Optional[bool] = None
    duplicates: list = field(default_factory=list)


def _check_cap(n, cap):
    if n > cap:
        raise ValueError(f"n={n} exceeds the brute force cap ({cap})")


@lru_cache(maxsize=16)
def _all_tree_bits(n):
    universe = edge_universe(n)
    m = len(universe)
    found = []
    for combo in combinations(range(m), n - 1):
        bits = ["0"] * m
        for i in combo:
            bits[i] = "1"
        if is_spanning_tree(n, [universe[i] for i in combo]):
            found.append("".join(bits))
    return frozenset(found)


def brute_force_trees(n, cap=DEFAULT_CAP):
    """All spanning trees of the fan on n path vertices, as bit strings."""
    _check_cap(n, cap)
    return _all_tree_bits(n)


def check_pivot_gray(trees) -> ListingReport:
    """Verify consecutive trees differ by one move around a shared pivot.

    ``trees`` is any iterable of SpanningTree; on failure
    ``first_violation`` is the index of the offending (latter) tree."""
    prev = None
    length = 0
    for t in trees:
        cur = set(t.edges())
        if prev is not None:
            gone = prev - cur
            new = cur - prev
            ok = len(gone) == 1 and len(new) == 1
            if ok:
                (a, b), (c, d) = gone.pop(), new.pop()
                ok = len({a, b} & {c, d}) == 1
            if not ok:
                return ListingReport(length + 1, is_gray=False,
                                     first_violation=length)
        prev = cur
        length += 1
    return ListingReport(length, is_gray=True)


def check_exhaustive(n, trees, cap=DEFAULT_CAP) -> ListingReport:
    """Verify a listing hits every spanning tree exactly once."""
    _check_cap(n, cap)
    expected = brute_force_trees(n, cap)
    seen = set()
    report = ListingReport(0)
    for i, t in enumerate(trees):
        bits = "".join("01"[b] for b in t.path) + "".join("01"[b] for b in t.spokes)
        if bits in seen:
            report.duplicates.append(i)
        seen.add(bits)
        report.length += 1
    report.is_exhaustive = not report.duplicates and seen == expected
    return report


def check_reversal(n, cap=DEFAULT_CAP) -> bool:
    """Greedy restarted at the forward listing's last tree must retrace
    it backwards, and the reverse engine must agree."""
    _check_cap(n, cap)
    forward = [t.copy() for _, t in list_stream(n)]
    back = greedy_listing(forward[-1])
    if [t.key() for t in back] != [t.key() for t in reversed(forward)]:
        return False
    rev = [t.copy() for _, t in list_stream(n, reverse=True)]
    return [t.key() for t in rev] == [t.key() for t in reversed(forward)]


def check_engines_agree(n, cap=DEFAULT_CAP) -> bool:
    """Greedy from the path tree and the recursive engine must produce
    identical move-by-move listings."""
    _check_cap(n, cap)
    rec = [(m, t.key()) for m, t in list_stream(n)]
    grd = [(m, t.key()) for m, t in greedy_events(path_tree(n))]
    return rec == grd
