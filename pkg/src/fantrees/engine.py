"""Streaming recursive generation of the canonical listing.

The listing starts at the path tree and every later tree differs from
its predecessor by one pivot move.  The block for k active path vertices
decomposes into four stages: the block for k-1 with the far path edge
kept, the same block reversed with the far spoke kept instead, and two
blocks for k-2 with both far edges kept (the second one reversed).  One
move is emitted per tree, which makes a full run cost O(1) amortized per
tree in O(n) space.

Two drivers cover both consumption styles.  :func:`generate` pushes
events into a sink callback straight from the recursion;
:func:`list_stream` is a pull iterator over the same event sequence,
built on an explicit frame stack so it has no recursion limit.  Both
mutate a single tree buffer in place: a sink or consumer that retains
trees must copy them, each copy being O(n) and therefore opting out of
the constant amortized bound.

A run owns its buffer and stack; do not share one run across threads.
Independent runs are fine in parallel.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .core import INF, PivotMove, SpanningTree, path_tree
from .ranking import last_tree

Sink = Callable[[Optional[PivotMove], SpanningTree], None]


@dataclass
class GenStats:
    """Counters for one instrumented run: total frame activations and
    the deepest recursion reached."""

    activations: int = 0
    max_depth: int = 0
    _depth: int = 0

    def _enter(self):
        self.activations += 1
        self._depth += 1
        if self._depth > self.max_depth:
            self.max_depth = self._depth

    def _exit(self):
        self._depth -= 1


def _pivot(t, u, v, w, sink):
    t.remove_edge(u, v)
    t.add_edge(u, w)
    sink(PivotMove(u, v, w), t)


def gen(t, k, s1, var_edge, sink, stats=None):
    """Emit the forward block for ``k`` active path vertices.

    ``t`` must hold the entry tree of the block (the path tree for the
    root call) and is left at the block's final tree.  ``s1`` gates the
    head stage; ``var_edge`` reroutes the stage exit move onto the next
    path edge instead of the spoke (meaningful only for k <= n-2)."""
    if stats is not None:
        stats._enter()
    if k == 2:
        if var_edge:
            _pivot(t, 2, INF, 3, sink)
    elif k == 3:
        if s1:
            _pivot(t, 3, 2, 4 if var_edge else INF, sink)
        _pivot(t, 2, INF, 3, sink)
    else:
        if s1:
            gen(t, k - 1, True, False, sink, stats)
            _pivot(t, k, k - 1, k + 1 if var_edge else INF, sink)
        rev_gen(t, k - 1, True, False, sink, stats)
        _pivot(t, k - 1, k - 2, k, sink)
        gen(t, k - 2, True, True, sink, stats)
        if k > 4:
            _pivot(t, k - 2, k - 1, INF, sink)
        rev_gen(t, k - 2, False, False, sink, stats)
    if stats is not None:
        stats._exit()


def rev_gen(t, k, s1, var_edge, sink, stats=None):
    """Emit exactly the reverse of :func:`gen` for the same frame.

    Entry state is the tree gen would leave behind; exit state is gen's
    entry tree.  Statement blocks run in reverse order and every move is
    inverted."""
    if stats is not None:
        stats._enter()
    if k == 2:
        if var_edge:
            _pivot(t, 2, 3, INF, sink)
    elif k == 3:
        _pivot(t, 2, 3, INF, sink)
        if s1:
            _pivot(t, 3, 4 if var_edge else INF, 2, sink)
    else:
        gen(t, k - 2, False, False, sink, stats)
        if k > 4:
            _pivot(t, k - 2, INF, k - 1, sink)
        rev_gen(t, k - 2, True, True, sink, stats)
        _pivot(t, k - 1, k, k - 2, sink)
        gen(t, k - 1, True, False, sink, stats)
        if s1:
            _pivot(t, k, k + 1 if var_edge else INF, k - 1, sink)
            rev_gen(t, k - 1, True, False, sink, stats)
    if stats is not None:
        stats._exit()


def generate(n, sink, reverse=False, stats=None) -> SpanningTree:
    """Run the full listing (or its reversal) through ``sink``.

    The first callback carries move None and the starting tree; there is
    exactly one callback per tree.  Returns the final tree.  Python
    recursion depth reaches n - 1, so very large n should use
    :func:`list_stream` instead."""
    t = last_tree(n) if reverse else path_tree(n)
    sink(None, t)
    if reverse:
        rev_gen(t, n, True, False, sink, stats)
    else:
        gen(t, n, True, False, sink, stats)
    return t


_GEN, _REV = 0, 1


def list_stream(n, reverse=False) -> Iterator[tuple]:
    """Lazily yield the (move, tree) events of the listing.

    The first event carries move None.  The yielded tree is the live
    buffer shared by all events; copy it to keep a snapshot.  Constant
    amortized work per event, O(n) memory, no recursion limit."""
    t = last_tree(n) if reverse else path_tree(n)
    yield None, t

    def mv(u, v, w):
        t.remove_edge(u, v)
        t.add_edge(u, w)
        return PivotMove(u, v, w)

    # Suspended frames of gen/rev_gen: [proc, k, s1, var_edge, pc] where
    # pc is the resume point.  The kernel module replays the same machine
    # on packed arrays; keep the two in step.
    stack = [[_REV if reverse else _GEN, n, True, False, 0]]
    while stack:
        f = stack[-1]
        proc, k, s1, ve, pc = f
        if proc == _GEN:
            if k == 2:
                stack.pop()
                if ve:
                    yield mv(2, INF, 3), t
            elif k == 3:
                if pc == 0:
                    f[4] = 1
                    if s1:
                        yield mv(3, 2, 4 if ve else INF), t
                else:
                    stack.pop()
                    yield mv(2, INF, 3), t
            elif pc == 0:
                if s1:
                    f[4] = 1
                    stack.append([_GEN, k - 1, True, False, 0])
                else:
                    f[4] = 2
            elif pc == 1:
                f[4] = 2
                yield mv(k, k - 1, k + 1 if ve else INF), t
            elif pc == 2:
                f[4] = 3
                stack.append([_REV, k - 1, True, False, 0])
            elif pc == 3:
                f[4] = 4
                yield mv(k - 1, k - 2, k), t
            elif pc == 4:
                f[4] = 5
                stack.append([_GEN, k - 2, True, True, 0])
            elif pc == 5:
                f[4] = 6
                if k > 4:
                    yield mv(k - 2, k - 1, INF), t
            elif pc == 6:
                f[4] = 7
                stack.append([_REV, k - 2, False, False, 0])
            else:
                stack.pop()
        else:
            if k == 2:
                stack.pop()
                if ve:
                    yield mv(2, 3, INF), t
            elif k == 3:
                if pc == 0:
                    f[4] = 1
                    yield mv(2, 3, INF), t
                else:
                    stack.pop()
                    if s1:
                        yield mv(3, 4 if ve else INF, 2), t
            elif pc == 0:
                f[4] = 1
                stack.append([_GEN, k - 2, False, False, 0])
            elif pc == 1:
                f[4] = 2
                if k > 4:
                    yield mv(k - 2, INF, k - 1), t
            elif pc == 2:
                f[4] = 3
                stack.append([_REV, k - 2, True, True, 0])
            elif pc == 3:
                f[4] = 4
                yield mv(k - 1, k, k - 2), t
            elif pc == 4:
                f[4] = 5
                stack.append([_GEN, k - 1, True, False, 0])
            elif pc == 5:
                if s1:
                    f[4] = 6
                    yield mv(k, k + 1 if ve else INF, k - 1), t
                else:
                    stack.pop()
            elif pc == 6:
                f[4] = 7
                stack.append([_REV, k - 1, True, False, 0])
            else:
                stack.pop()
