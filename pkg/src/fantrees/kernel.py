"""Instrumented full-listing runs on packed arrays.

The recursive stage structure is replayed iteratively with an explicit
frame stack over numpy arrays, counting emitted moves, frame activations
and peak stack depth without any per-event Python work.  That makes
whole-listing structural checks and throughput measurement practical at
sizes where the listing holds billions of trees.  The tree buffer is
still maintained (two byte writes per move) so the final state can be
cross-checked against the unranked last tree.

The hot loop is numba-jitted when available.  Set FANTREES_JIT=0 to
force the pure Python lane (the same function, uncompiled) or
FANTREES_JIT=1 to require the compiled lane.  Counters are int64, which
caps runs at n <= 47; the streaming engines have no such limit.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass

import numpy as np

from .core import SpanningTree
from .ranking import count

_GEN, _REV = 0, 1


def _run_listing(n, path, spokes, stack):
    # stack columns: proc, k, s1, var_edge, pc.  Mirrors the frame
    # machine in engine.list_stream; keep the two in step.
    events = 1
    activations = 1
    max_depth = 1
    sp = 0
    stack[0, 0] = _GEN
    stack[0, 1] = n
    stack[0, 2] = 1
    stack[0, 3] = 0
    stack[0, 4] = 0
    while sp >= 0:
        proc = stack[sp, 0]
        k = stack[sp, 1]
        s1 = stack[sp, 2]
        ve = stack[sp, 3]
        pc = stack[sp, 4]
        if proc == _GEN:
            if k == 2:
                sp -= 1
                if ve == 1:
                    spokes[0] = 0
                    path[0] = 1
                    events += 1
            elif k == 3:
                if pc == 0:
                    stack[sp, 4] = 1
                    if s1 == 1:
                        path[0] = 0
                        if ve == 1:
                            path[1] = 1
                        else:
                            spokes[1] = 1
                        events += 1
                else:
                    sp -= 1
                    spokes[0] = 0
                    path[0] = 1
                    events += 1
            elif pc == 0:
                if s1 == 1:
                    stack[sp, 4] = 1
                    sp += 1
                    stack[sp, 0] = _GEN
                    stack[sp, 1] = k - 1
                    stack[sp, 2] = 1
                    stack[sp, 3] = 0
                    stack[sp, 4] = 0
                    activations += 1
                    if sp + 1 > max_depth:
                        max_depth = sp + 1
                else:
                    stack[sp, 4] = 2
            elif pc == 1:
                stack[sp, 4] = 2
                path[k - 3] = 0
                if ve == 1:
                    path[k - 2] = 1
                else:
                    spokes[k - 2] = 1
                events += 1
            elif pc == 2:
                stack[sp, 4] = 3
                sp += 1
                stack[sp, 0] = _REV
                stack[sp, 1] = k - 1
                stack[sp, 2] = 1
                stack[sp, 3] = 0
                stack[sp, 4] = 0
                activations += 1
                if sp + 1 > max_depth:
                    max_depth = sp + 1
            elif pc == 3:
                stack[sp, 4] = 4
                path[k - 4] = 0
                path[k - 3] = 1
                events += 1
            elif pc == 4:
                stack[sp, 4] = 5
                sp += 1
                stack[sp, 0] = _GEN
                stack[sp, 1] = k - 2
                stack[sp, 2] = 1
                stack[sp, 3] = 1
                stack[sp, 4] = 0
                activations += 1
                if sp + 1 > max_depth:
                    max_depth = sp + 1
            elif pc == 5:
                stack[sp, 4] = 6
                if k > 4:
                    path[k - 4] = 0
                    spokes[k - 4] = 1
                    events += 1
            elif pc == 6:
                stack[sp, 4] = 7
                sp += 1
                stack[sp, 0] = _REV
                stack[sp, 1] = k - 2
                stack[sp, 2] = 0
                stack[sp, 3] = 0
                stack[sp, 4] = 0
                activations += 1
                if sp + 1 > max_depth:
                    max_depth = sp + 1
            else:
                sp -= 1
        else:
            if k == 2:
                sp -= 1
                if ve == 1:
                    path[0] = 0
                    spokes[0] = 1
                    events += 1
            elif k == 3:
                if pc == 0:
                    stack[sp, 4] = 1
                    path[0] = 0
                    spokes[0] = 1
                    events += 1
                else:
                    sp -= 1
                    if s1 == 1:
                        if ve == 1:
                            path[1] = 0
                        else:
                            spokes[1] = 0
                        path[0] = 1
                        events += 1
            elif pc == 0:
                stack[sp, 4] = 1
                sp += 1
                stack[sp, 0] = _GEN
                stack[sp, 1] = k - 2
                stack[sp, 2] = 0
                stack[sp, 3] = 0
                stack[sp, 4] = 0
                activations += 1
                if sp + 1 > max_depth:
                    max_depth = sp + 1
            elif pc == 1:
                stack[sp, 4] = 2
                if k > 4:
                    spokes[k - 4] = 0
                    path[k - 4] = 1
                    events += 1
            elif pc == 2:
                stack[sp, 4] = 3
                sp += 1
                stack[sp, 0] = _REV
                stack[sp, 1] = k - 2
                stack[sp, 2] = 1
                stack[sp, 3] = 1
                stack[sp, 4] = 0
                activations += 1
                if sp + 1 > max_depth:
                    max_depth = sp + 1
            elif pc == 3:
                stack[sp, 4] = 4
                path[k - 3] = 0
                path[k - 4] = 1
                events += 1
            elif pc == 4:
                stack[sp, 4] = 5
                sp += 1
                stack[sp, 0] = _GEN
                stack[sp, 1] = k - 1
                stack[sp, 2] = 1
                stack[sp, 3] = 0
                stack[sp, 4] = 0
                activations += 1
                if sp + 1 > max_depth:
                    max_depth = sp + 1
            elif pc == 5:
                if s1 == 1:
                    stack[sp, 4] = 6
                    if ve == 1:
                        path[k - 2] = 0
                    else:
                        spokes[k - 2] = 0
                    path[k - 3] = 1
                    events += 1
                else:
                    sp -= 1
            elif pc == 6:
                stack[sp, 4] = 7
                sp += 1
                stack[sp, 0] = _REV
                stack[sp, 1] = k - 1
                stack[sp, 2] = 1
                stack[sp, 3] = 0
                stack[sp, 4] = 0
                activations += 1
                if sp + 1 > max_depth:
                    max_depth = sp + 1
            else:
                sp -= 1
    return events, activations, max_depth


def _env_request():
    raw = os.environ.get("FANTREES_JIT", "").strip().lower()
    if raw in ("0", "false", "no", "off"):
        return False
    if raw in ("1", "true", "yes", "on"):
        return True
    return None


_REQUESTED = _env_request()
_COMPILED = None
if _REQUESTED is not False:
    try:
        from numba import njit

        _COMPILED = njit(cache=True)(_run_listing)
    except ImportError:
        _COMPILED = None


def jit_enabled() -> bool:
    """True when the compiled lane is the default for :func:`run_listing`."""
    return _COMPILED is not None


@dataclass(frozen=True)
class KernelRun:
    """Result of one instrumented run."""

    n: int
    jitted: bool
    trees: int
    moves: int
    activations: int
    max_depth: int
    seconds: float
    last: SpanningTree


_warmed = False


def run_listing(n, jit=None) -> KernelRun:
    """Run the whole forward listing, counting instead of yielding.

    ``jit`` overrides the lane (None means the module default).  Raises
    when n would overflow the int64 counters or when the compiled lane
    is requested but unavailable."""
    total = count(n)
    if total >= 2 ** 63:
        raise ValueError(f"n={n} overflows the int64 counters (largest supported n is 47)")
    use_jit = jit_enabled() if jit is None else bool(jit)
    if use_jit and _COMPILED is None:
        raise RuntimeError("compiled lane unavailable (numba missing or FANTREES_JIT=0)")
    fn = _COMPILED if use_jit else _run_listing
    global _warmed
    if use_jit and not _warmed:
        fn(5, np.ones(3, np.uint8),
           np.array([1, 0, 0, 0], np.uint8), np.zeros((9, 5), np.int64))
        _warmed = True
    path = np.ones(n - 2, dtype=np.uint8)
    spokes = np.zeros(n - 1, dtype=np.uint8)
    spokes[0] = 1
    stack = np.zeros((n + 4, 5), dtype=np.int64)
    start = time.perf_counter()
    events, activations, max_depth = fn(n, path, spokes, stack)
    seconds = time.perf_counter() - start
    last = SpanningTree(n, path.tobytes(), spokes.tobytes())
    return KernelRun(n, use_jit, int(events), int(events) - 1,
                     int(activations), int(max_depth), seconds, last)
