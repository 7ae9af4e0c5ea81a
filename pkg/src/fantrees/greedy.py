"""Greedy construction of pivot Gray code listings.

Each step scans candidate moves in priority order: pivot vertex
ascending with the hub last, then removed endpoint ascending, then added
endpoint ascending.  The first move whose result is a spanning tree not
seen before is taken; the walk halts when no candidate qualifies.
Starting from the path tree the walk visits every spanning tree; other
starting trees may halt early, and the truncated listing is returned as
is.

The visited set stores one canonical key per tree, so memory grows
linearly with the number of trees emitted.  A walk is single-owner
mutable state; run independent walks for concurrency.
"""

from __future__ import annotations

from typing import Iterator, Optional

from .core import INF, PivotMove, SpanningTree, _edge_slot


def _vertex_index(n, v) -> int:
    return n - 1 if v == INF else v - 2


def _universe_neighbors(n, u) -> list:
    """Neighbors of ``u`` in the fan graph, ascending (hub last)."""
    if u == INF:
        return list(range(2, n + 1))
    out = []
    if u > 2:
        out.append(u - 1)
    if u < n:
        out.append(u + 1)
    out.append(INF)
    return out


def _reachable_without(tree, u, v) -> bytearray:
    """Mark the vertices reachable from ``u`` in the tree minus edge
    (u, v).

    Re-adding an edge from ``u`` into this component would close a
    cycle; an edge to any unmarked vertex reconnects the tree."""
    n = tree.n
    seen = bytearray(n)
    seen[_vertex_index(n, u)] = 1
    stack = [u]
    while stack:
        x = stack.pop()
        for y in _universe_neighbors(n, x):
            if (x == u and y == v) or (x == v and y == u):
                continue
            if tree.has_edge(x, y) and not seen[_vertex_index(n, y)]:
                seen[_vertex_index(n, y)] = 1
                stack.append(y)
    return seen


def _key_after(tree, u, v, w) -> bytes:
    n = tree.n
    buf = bytearray(tree.key())
    kind, i = _edge_slot(n, u, v)
    buf[i if kind == "p" else n - 2 + i] = 0
    kind, i = _edge_slot(n, u, w)
    buf[i if kind == "p" else n - 2 + i] = 1
    return bytes(buf)


def next_greedy_move(tree, visited) -> Optional[PivotMove]:
    """Smallest move from ``tree`` whose result is a spanning tree with a
    key outside ``visited``, or None when nothing qualifies.

    ``visited`` is a set of :meth:`SpanningTree.key` values."""
    n = tree.n
    for u in (*range(2, n + 1), INF):
        nbrs = _universe_neighbors(n, u)
        removable = [v for v in nbrs if tree.has_edge(u, v)]
        if not removable:
            continue
        addable = [w for w in nbrs if not tree.has_edge(u, w)]
        if not addable:
            continue
        for v in removable:
            reach = _reachable_without(tree, u, v)
            for w in addable:
                if reach[_vertex_index(n, w)]:
                    continue
                if _key_after(tree, u, v, w) not in visited:
                    return PivotMove(u, v, w)
    return None


def greedy_events(start: SpanningTree) -> Iterator[tuple]:
    """Yield (move, tree) events of the greedy walk from ``start``.

    The first event carries move None; every yielded tree is a snapshot."""
    t = start.copy()
    visited = {t.key()}
    yield None, t.copy()
    while True:
        move = next_greedy_move(t, visited)
        if move is None:
            return
        t.remove_edge(move.pivot, move.removed)
        t.add_edge(move.pivot, move.added)
        visited.add(t.key())
        yield move, t.copy()


def greedy_listing(start: SpanningTree) -> list[SpanningTree]:
    """All trees of the greedy walk from ``start``, in order."""
    return [t for _, t in greedy_events(start)]
