"""Fan graph model: vertices, edges, spanning trees, and pivot moves.

The fan graph on n vertices is a hub joined to every vertex of the path
v_2, v_3, ..., v_n.  Finite vertices are plain integers and the hub is
``INF`` (``float("inf")``), which sorts after every finite label.  Edges
are normalized ``(lo, hi)`` tuples with ``lo < hi``: path edges
``(i, i + 1)`` for 2 <= i <= n-1 and spokes ``(i, INF)`` for 2 <= i <= n,
so the universe has exactly 2n - 3 edges.

A spanning tree is stored as two bit arrays indexed by the smaller
endpoint of each edge, one for path edges and one for spokes.  Edge
insertion, removal and membership are O(1), and concatenating the two
arrays gives the canonical (2n - 3)-bit encoding used for keys and
serialization: path bits for i = 2..n-1 first, then spoke bits for
i = 2..n.

Trees are mutable because the generation engines pivot edges in place;
every other value here is immutable.  Nothing keeps shared state, so
independent trees can be used freely across threads.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

INF = float("inf")


class InvalidMoveError(ValueError):
    """A pivot move whose preconditions fail on the given tree."""


class PivotMove(NamedTuple):
    """One transition: at ``pivot``, drop the edge to ``removed`` and
    attach the edge to ``added`` instead."""

    pivot: int | float
    removed: int | float
    added: int | float

    def inverse(self) -> "PivotMove":
        return PivotMove(self.pivot, self.added, self.removed)

    def __str__(self) -> str:
        return (f"pivot {label(self.pivot)}: "
                f"-{label(self.removed)} +{label(self.added)}")


def label(v) -> str:
    """Vertex label as text ("inf" for the hub)."""
    return "inf" if v == INF else str(v)


def _require_n(n) -> None:
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"fan graph needs an integer n >= 2, got {n!r}")


def edge_universe(n) -> list[tuple]:
    """All edges of the fan graph, path edges then spokes, each group by
    ascending smaller endpoint.  This order fixes the bit positions of
    the canonical encoding."""
    _require_n(n)
    return [(i, i + 1) for i in range(2, n)] + [(i, INF) for i in range(2, n + 1)]


def _edge_slot(n, u, v):
    """Map an edge to ('p' or 's', array index).

    Raises ValueError when the pair is not an edge of the fan graph."""
    lo, hi = (u, v) if v > u else (v, u)
    if isinstance(lo, int) and lo >= 2:
        if hi == INF:
            if lo <= n:
                return "s", lo - 2
        elif isinstance(hi, int) and hi == lo + 1 and lo <= n - 1:
            return "p", lo - 2
    raise ValueError(f"{label(u)}-{label(v)} is not an edge of the fan graph on n={n}")


class SpanningTree:
    """Edge set of a spanning tree of the fan graph on ``n`` vertices.

    ``path[i - 2]`` holds the path edge (i, i+1) and ``spokes[i - 2]``
    the spoke (i, INF).  The mutators do not re-validate, so a tree may
    pass through intermediate states while an engine pivots edges;
    :func:`is_spanning_tree` decides validity when needed.
    """

    __slots__ = ("n", "path", "spokes")

    def __init__(self, n, path=None, spokes=None):
        _require_n(n)
        self.n = n
        self.path = bytearray(n - 2) if path is None else bytearray(path)
        self.spokes = bytearray(n - 1) if spokes is None else bytearray(spokes)
        if len(self.path) != n - 2 or len(self.spokes) != n - 1:
            raise ValueError("bit arrays do not match n")

    def copy(self) -> "SpanningTree":
        return SpanningTree(self.n, self.path, self.spokes)

    def key(self) -> bytes:
        """Canonical hashable key: path bits then spoke bits."""
        return bytes(self.path) + bytes(self.spokes)

    def has_edge(self, u, v) -> bool:
        kind, i = _edge_slot(self.n, u, v)
        return bool(self.path[i] if kind == "p" else self.spokes[i])

    def add_edge(self, u, v) -> None:
        kind, i = _edge_slot(self.n, u, v)
        if kind == "p":
            self.path[i] = 1
        else:
            self.spokes[i] = 1

    def remove_edge(self, u, v) -> None:
        kind, i = _edge_slot(self.n, u, v)
        if kind == "p":
            self.path[i] = 0
        else:
            self.spokes[i] = 0

    def edges(self) -> list[tuple]:
        """Present edges in universe order."""
        out = [(i + 2, i + 3) for i, b in enumerate(self.path) if b]
        out += [(i + 2, INF) for i, b in enumerate(self.spokes) if b]
        return out

    def edge_count(self) -> int:
        return sum(self.path) + sum(self.spokes)

    def is_spanning(self) -> bool:
        return is_spanning_tree(self.n, self.edges())

    def __eq__(self, other):
        return (isinstance(other, SpanningTree) and self.n == other.n
                and self.path == other.path and self.spokes == other.spokes)

    __hash__ = None  # mutable; use key()

    def __repr__(self):
        return f"SpanningTree({self.n}, [{encode_text(self)}])"


def path_tree(n) -> SpanningTree:
    """The path through the hub: the spoke at v_2 plus every path edge.
    This is the first tree of the canonical listing."""
    _require_n(n)
    return SpanningTree(n, b"\x01" * (n - 2), b"\x01" + b"\x00" * (n - 2))


def star_tree(n) -> SpanningTree:
    """All n - 1 spokes."""
    _require_n(n)
    return SpanningTree(n, b"\x00" * (n - 2), b"\x01" * (n - 1))


def reversed_path_tree(n) -> SpanningTree:
    """The path entering the hub at the far end: the spoke at v_n plus
    every path edge."""
    _require_n(n)
    return SpanningTree(n, b"\x01" * (n - 2), b"\x00" * (n - 2) + b"\x01")


def is_spanning_tree(n, edges: Iterable[tuple]) -> bool:
    """True iff ``edges`` forms a spanning tree of the fan graph.

    Every pair must belong to the edge universe (ValueError otherwise).
    n - 1 edges with no cycle over n vertices are necessarily connected,
    so a single union-find pass decides the answer."""
    _require_n(n)
    pairs = []
    for u, v in edges:
        kind, i = _edge_slot(n, u, v)
        # vertex indices: finite x -> x - 2, hub -> n - 1
        pairs.append((i, i + 1) if kind == "p" else (i, n - 1))
    if len(pairs) != n - 1:
        return False
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def apply_move(tree: SpanningTree, move: PivotMove) -> SpanningTree:
    """Return a new tree with ``move`` applied.

    The removed edge must be present and the added edge absent; both must
    belong to the universe.  The result is not checked for acyclicity, so
    callers pivoting blindly must validate it themselves.  Applying the
    inverse move afterwards restores the original tree."""
    u, v, w = move
    try:
        has_removed = tree.has_edge(u, v)
        has_added = tree.has_edge(u, w)
    except ValueError as exc:
        raise InvalidMoveError(str(exc)) from None
    if not has_removed:
        raise InvalidMoveError(f"cannot remove {label(u)}-{label(v)}: not a tree edge")
    if has_added:
        raise InvalidMoveError(f"cannot add {label(u)}-{label(w)}: already present")
    out = tree.copy()
    out.remove_edge(u, v)
    out.add_edge(u, w)
    return out


def encode_text(tree: SpanningTree) -> str:
    """Comma separated edge list in universe order, e.g. "2-3,2-inf"."""
    return ",".join(f"{u}-{label(v)}" for u, v in tree.edges())


def decode_text(n, text: str) -> SpanningTree:
    """Parse an edge list back into a tree.

    Rejects malformed tokens, pairs outside the fan graph, duplicate
    edges, and edge sets that are not spanning trees."""
    _require_n(n)
    tree = SpanningTree(n)
    for token in text.split(","):
        token = token.strip()
        left, sep, right = token.partition("-")
        try:
            if not sep:
                raise ValueError
            u = int(left)
            v = INF if right.strip() == "inf" else int(right)
        except ValueError:
            raise ValueError(f"bad edge token {token!r}, expected i-j or i-inf") from None
        if tree.has_edge(u, v):
            raise ValueError(f"duplicate edge {token!r}")
        tree.add_edge(u, v)
    if not is_spanning_tree(n, tree.edges()):
        raise ValueError(f"{text!r} is not a spanning tree of the fan graph on n={n}")
    return tree


def encode_bits(tree: SpanningTree) -> str:
    """Fixed width 0/1 string: path bits for i = 2..n-1, then spoke bits
    for i = 2..n."""
    return "".join("1" if b else "0" for b in tree.key())


def decode_bits(n, bits: str) -> SpanningTree:
    """Inverse of :func:`encode_bits`, with full validation."""
    _require_n(n)
    if len(bits) != 2 * n - 3 or set(bits) - {"0", "1"}:
        raise ValueError(f"expected {2 * n - 3} bits of 0/1, got {bits!r}")
    if bits.count("1") != n - 1:
        raise ValueError(f"expected {n - 1} edges, got {bits.count('1')}")
    tree = SpanningTree(n, bytes(c == "1" for c in bits[: n - 2]),
                        bytes(c == "1" for c in bits[n - 2:]))
    if not tree.is_spanning():
        raise ValueError(f"{bits!r} encodes a cyclic or disconnected edge set")
    return tree
