"""Acceptance gate: one test per shipped guarantee, one line of output each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
The kernel sweep in C7 covers every n up to 25 and takes about a minute.
"""

import random
import time

from fantrees.core import encode_text, path_tree, reversed_path_tree, star_tree
from fantrees.engine import list_stream
from fantrees.greedy import greedy_listing
from fantrees.kernel import jit_enabled, run_listing
from fantrees.oracle import (brute_force_trees, check_engines_agree,
                             check_exhaustive, check_pivot_gray,
                             check_reversal)
from fantrees.ranking import _rank_steps, _unrank_steps, count, last_tree, \
    rank, unrank


def _report(cid, ok, detail):
    print(f"[ACCEPTANCE] {cid}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"{cid}: {detail}"


def test_c1_counting():
    brute_ok = all(len(brute_force_trees(n)) == count(n) for n in range(2, 13))
    rec_ok = all(count(n) == 3 * count(n - 1) - count(n - 2)
                 for n in range(4, 61))
    landmarks = (count(5), count(6), count(12), count(20), count(25)) == \
        (21, 55, 17711, 39088169, 4807526976)
    _report("C1", brute_ok and rec_ok and landmarks,
            "closed form count matches brute force for n=2..12 "
            "and the recurrence through n=60")


def test_c2_engines_agree():
    ok = all(check_engines_agree(n, cap=11) for n in range(2, 12))
    _report("C2", ok, "greedy and recursive listings identical for n=2..11")


def test_c3_pivot_gray():
    ok = True
    for n in range(2, 15):
        rep = check_pivot_gray(t for _, t in list_stream(n))
        ok = ok and rep.is_gray and rep.length == count(n)
    _report("C3", ok, "every step is one pivot move for n=2..14")


def test_c4_exhaustive():
    ok = True
    for n in range(2, 13):
        rep = check_exhaustive(n, (t for _, t in list_stream(n)))
        ok = ok and rep.is_exhaustive
    _report("C4", ok, "each spanning tree listed exactly once for n=2..12")


def test_c5_reversal():
    ok = all(check_reversal(n) for n in range(2, 11))
    _report("C5", ok, "greedy restarted at the last tree retraces the "
            "listing backwards for n=2..10")


def test_c6_rank_unrank():
    ok = True
    for n in range(2, 11):
        for i, (_, t) in enumerate(list_stream(n), start=1):
            ok = ok and rank(t) == i and unrank(n, i).key() == t.key()
    anchor = encode_text(unrank(5, 16)) == "2-3,3-4,2-inf,5-inf" \
        and rank(unrank(5, 16)) == 16
    rng = random.Random(20260814)
    linear = True
    for n in (10, 47, 123, 321, 500):
        total = count(n)
        for r in (1, total, *(rng.randrange(1, total + 1) for _ in range(25))):
            t, lv = _unrank_steps(n, r)
            back, lv2 = _rank_steps(t)
            linear = linear and back == r and lv <= n and lv2 <= n
    _report("C6", ok and anchor and linear,
            "bijective for n=2..10, O(n) descent spot checked up to n=500")


def test_c7_kernel_sweep():
    if not jit_enabled():
        _report("C7", False, "compiled lane unavailable; the n=2..25 sweep needs it")
    ok = True
    runs = {}
    t0 = time.perf_counter()
    for n in range(2, 26):
        r = run_listing(n)
        runs[n] = r
        ok = ok and r.trees == count(n) and r.moves == count(n) - 1
        ok = ok and r.activations <= 2 * count(n)
        ok = ok and r.max_depth <= max(n - 1, 1)
        ok = ok and r.last.key() == last_tree(n).key()
    wall = time.perf_counter() - t0
    # constant amortized cost: per tree time flat between n=20 and n=25
    per20 = min(runs[20].seconds, *(run_listing(20).seconds for _ in range(2)))
    per20 /= runs[20].trees
    per25 = runs[25].seconds / runs[25].trees
    ratio = per25 / per20
    ok = ok and 0.5 < ratio < 2.0
    total = sum(r.trees for r in runs.values())
    _report("C7", ok, f"{total} trees over n=2..25 in {wall:.1f}s "
            f"({runs[25].trees} at n=25), counters bounded, "
            f"per tree cost ratio n25/n20 = {ratio:.2f}")


def test_c8_alternate_starts():
    revpath = [len(greedy_listing(reversed_path_tree(n))) for n in range(2, 9)]
    star = [len(greedy_listing(star_tree(n))) for n in range(2, 9)]
    full = [count(n) for n in range(2, 9)]
    ok = revpath == [1, 3, 8, 21, 54, 134, 350] \
        and star == [1, 3, 8, 21, 55, 135, 375] \
        and any(g < f for g, f in zip(revpath, full)) \
        and any(g < f for g, f in zip(star, full))
    _report("C8", ok, f"greedy is start sensitive: reversed path gives "
            f"{revpath} and star gives {star} against full {full} for n=2..8")
