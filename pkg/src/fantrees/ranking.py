"""Counting, ranking and unranking within the canonical listing.

The number of spanning trees of the fan graph on n vertices is the
Fibonacci number of even index 2(n - 1), taking f_1 = f_2 = 1.  The
listing decomposes into four stages whose sizes split that count as
t_{n-1} + t_{n-1} + t_{n-2} + (t_{n-2} - t_{n-3}): trees keeping the far
path edge, trees keeping the far spoke (reversed), and two smaller
blocks keeping both.  Walking the stages top down converts a tree to its
1-indexed position and back in O(n) integer operations per call.  Counts
overflow 64 bits near n = 47, so everything here uses Python integers.

During descent the far stage of a block reroutes the attachment spoke of
the next block onto a path edge; the ``attach_path`` flag below carries
that substitution, and the same rule applies to the frozen base entries
(a set spoke bit at the block's top vertex stands for whichever
attachment edge is active).

``BASE_LISTINGS`` pins the full listings for n = 2, 3 and 4 as canonical
bit strings.  They were produced by the greedy engine and frozen here as
data; the test suite re-derives them on every run.

All functions are pure and safe for concurrent use.
"""

from __future__ import annotations

from .core import SpanningTree, _require_n

BASE_LISTINGS = {
    2: ("1",),
    3: ("110", "011", "101"),
    4: ("11100", "01110", "11010", "10011", "00111", "10101", "01101", "11001"),
}

_BASE_INDEX = {
    n: {bits: i + 1 for i, bits in enumerate(listing)}
    for n, listing in BASE_LISTINGS.items()
}


def count(n) -> int:
    """Number of spanning trees of the fan graph on n vertices."""
    _require_n(n)
    a, b = 1, 1
    for _ in range(2 * n - 4):
        a, b = b, a + b
    return b


def _counts_through(n) -> list:
    """t[j] = count(j) for 2 <= j <= n; slots 0 and 1 are unused."""
    t = [0] * (n + 1)
    a, b = 1, 1
    for j in range(2, n + 1):
        t[j] = b
        a, b = b, a + b
        a, b = b, a + b
    return t


def stage_sizes(n) -> tuple:
    """Sizes of the four stages of the listing; defined for n >= 5 and
    summing to count(n)."""
    if not isinstance(n, int) or n < 5:
        raise ValueError(f"stage decomposition needs n >= 5, got {n!r}")
    t = _counts_through(n)
    return t[n - 1], t[n - 1], t[n - 2], t[n - 2] - t[n - 3]


def rank(tree: SpanningTree) -> int:
    """1-indexed position of ``tree`` in the listing for its n."""
    r, _ = _rank_steps(tree)
    return r


def _rank_steps(tree):
    """Rank plus the number of descent levels visited, at most
    max(n - 3, 1)."""
    if not tree.is_spanning():
        raise ValueError("rank is defined for spanning trees only")
    n = tree.n
    t = _counts_through(n)
    path = bytearray(tree.path)
    spokes = bytearray(tree.spokes)
    sign, offset = 1, 0
    m, levels = n, 0
    while m >= 5:
        levels += 1
        e1 = path[m - 3]    # path edge (m-1, m)
        e2 = spokes[m - 2]  # spoke at m
        if e1 and e2:
            if spokes[m - 4]:
                # reversed tail stage, counted from the end of the block
                offset += sign * (2 * t[m - 1] + 2 * t[m - 2] + 1)
                sign = -sign
            else:
                offset += sign * 2 * t[m - 1]
                if path[m - 4]:
                    # rerouted attachment: restore the spoke it stands for
                    spokes[m - 4] = 1
            m -= 2
        elif e2:
            # reversed head stage
            offset += sign * (2 * t[m - 1] + 1)
            sign = -sign
            m -= 1
        elif e1:
            m -= 1
        else:
            raise AssertionError("disconnected vertex in a validated tree")
    levels += 1
    bits = _bits(path[: m - 2]) + _bits(spokes[: m - 1])
    return offset + sign * _BASE_INDEX[m][bits], levels


def _bits(buf) -> str:
    return "".join("1" if b else "0" for b in buf)


def unrank(n, r) -> SpanningTree:
    """Tree at 1-indexed position ``r`` of the listing for n."""
    tree, _ = _unrank_steps(n, r)
    return tree


def _unrank_steps(n, r):
    """Tree plus the number of descent levels visited, at most
    max(n - 3, 1)."""
    _require_n(n)
    t = _counts_through(n)
    if not isinstance(r, int) or not 1 <= r <= t[n]:
        raise ValueError(f"rank out of range 1..{t[n]}")
    path = bytearray(n - 2)
    spokes = bytearray(n - 1)
    attach_path = False  # current block attaches by a path edge instead of its spoke
    m, levels = n, 0
    while m >= 5:
        levels += 1
        t1, t2 = t[m - 1], t[m - 2]
        if r <= t1:  # forward head stage
            path[m - 3] = 1
            attach_path = False
            m -= 1
        elif r <= 2 * t1:  # reversed head stage
            if attach_path:
                path[m - 2] = 1
            else:
                spokes[m - 2] = 1
            r = 2 * t1 - r + 1
            attach_path = False
            m -= 1
        elif r <= 2 * t1 + t2:  # rerouted tail stage
            path[m - 3] = 1
            if attach_path:
                path[m - 2] = 1
            else:
                spokes[m - 2] = 1
            r -= 2 * t1
            attach_path = True
            m -= 2
        else:  # reversed tail stage
            path[m - 3] = 1
            if attach_path:
                path[m - 2] = 1
            else:
                spokes[m - 2] = 1
            r = 2 * t1 + 2 * t2 - r + 1
            attach_path = False
            m -= 2
    levels += 1
    entry = BASE_LISTINGS[m][r - 1]
    for j in range(m - 2):
        if entry[j] == "1":
            path[j] = 1
        if entry[m - 2 + j] == "1":
            spokes[j] = 1
    if entry[2 * m - 4] == "1":
        if attach_path:
            path[m - 2] = 1
        else:
            spokes[m - 2] = 1
    return SpanningTree(n, path, spokes), levels


def last_tree(n) -> SpanningTree:
    """Final tree of the listing, computed directly from its rank."""
    return unrank(n, count(n))
