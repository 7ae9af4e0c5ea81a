"""Spanning trees of the fan graph in pivot Gray code order.

The fan on n path vertices is the path 2, 3, ..., n joined to a hub.
This package lists its spanning trees so consecutive trees differ by a
single pivot move, through two interchangeable engines (a greedy search
and a recursive generator with O(1) amortized cost per tree), counts
them in closed form, and ranks and unranks listing positions in O(n).
"""

from .core import (INF, InvalidMoveError, PivotMove, SpanningTree,
                   apply_move, decode_bits, decode_text, edge_universe,
                   encode_bits, encode_text, is_spanning_tree, path_tree,
                   reversed_path_tree, star_tree)
from .engine import GenStats, gen, generate, list_stream, rev_gen
from .greedy import greedy_events, greedy_listing, next_greedy_move
from .kernel import KernelRun, jit_enabled, run_listing
from .oracle import (DEFAULT_CAP, ListingReport, brute_force_trees,
                     check_engines_agree, check_exhaustive,
                     check_pivot_gray, check_reversal)
from .ranking import count, last_tree, rank, stage_sizes, unrank

__version__ = "0.1.0"

__all__ = [
    "INF", "InvalidMoveError", "PivotMove", "SpanningTree", "apply_move",
    "decode_bits", "decode_text", "edge_universe", "encode_bits",
    "encode_text", "is_spanning_tree", "path_tree", "reversed_path_tree",
    "star_tree",
    "GenStats", "gen", "generate", "list_stream", "rev_gen",
    "greedy_events", "greedy_listing", "next_greedy_move",
    "KernelRun", "jit_enabled", "run_listing",
    "DEFAULT_CAP", "ListingReport", "brute_force_trees",
    "check_engines_agree", "check_exhaustive", "check_pivot_gray",
    "check_reversal",
    "count", "last_tree", "rank", "stage_sizes", "unrank",
    "__version__",
]
