"""Counting, stage sizes, rank/unrank bijection and descent bounds."""

import random

import pytest

from fantrees.core import SpanningTree, decode_text, encode_bits, encode_text, \
    path_tree, star_tree
from fantrees.engine import list_stream
from fantrees.greedy import greedy_listing
from fantrees.ranking import (BASE_LISTINGS, _rank_steps, _unrank_steps,
                              count, last_tree, rank, stage_sizes, unrank)


def test_count_small():
    assert [count(n) for n in range(2, 13)] == \
        [1, 3, 8, 21, 55, 144, 377, 987, 2584, 6765, 17711]


def test_count_landmarks():
    assert count(20) == 39088169
    assert count(25) == 4807526976
    assert count(47) == 7540113804746346429
    assert count(47) < 2 ** 63 <= count(48)


def test_count_recurrences():
    for n in range(4, 61):
        assert count(n) == 3 * count(n - 1) - count(n - 2)
    for n in range(5, 61):
        assert count(n) == 2 * count(n - 1) + 2 * count(n - 2) - count(n - 3)


def test_count_rejects():
    with pytest.raises(ValueError):
        count(1)
    with pytest.raises(ValueError):
        count(2.0)


def test_stage_sizes():
    assert stage_sizes(5) == (8, 8, 3, 2)
    assert stage_sizes(6) == (21, 21, 8, 5)
    for n in range(5, 31):
        assert sum(stage_sizes(n)) == count(n)
    with pytest.raises(ValueError):
        stage_sizes(4)


def test_base_listings_match_greedy():
    # the frozen base tables are exactly what the greedy engine produces
    for m, frozen in BASE_LISTINGS.items():
        got = tuple(encode_bits(t) for t in greedy_listing(path_tree(m)))
        assert got == frozen, m


def test_rank_anchors():
    assert rank(path_tree(5)) == 1
    assert rank(decode_text(5, "2-3,3-4,2-inf,5-inf")) == 16
    assert rank(decode_text(5, "2-3,4-5,2-inf,5-inf")) == 17
    assert rank(star_tree(5)) == 12
    assert rank(last_tree(5)) == 21


def test_unrank_anchors():
    assert encode_text(unrank(5, 1)) == "2-3,3-4,4-5,2-inf"
    assert encode_text(unrank(5, 16)) == "2-3,3-4,2-inf,5-inf"
    assert encode_text(unrank(5, 17)) == "2-3,4-5,2-inf,5-inf"
    assert encode_text(unrank(5, 21)) == "4-5,2-inf,3-inf,5-inf"


def test_unrank_range_errors():
    for bad in (0, 22, -3):
        with pytest.raises(ValueError):
            unrank(5, bad)
    with pytest.raises(ValueError):
        unrank(2, 2)


def test_rank_rejects_non_tree():
    with pytest.raises(ValueError):
        rank(SpanningTree(5))


def test_bijection_against_listing():
    for n in range(2, 11):
        for i, (_, t) in enumerate(list_stream(n), start=1):
            assert rank(t) == i, (n, i)
            assert unrank(n, i).key() == t.key(), (n, i)


def test_last_tree():
    assert encode_text(last_tree(2)) == "2-inf"
    assert encode_text(last_tree(3)) == "2-3,3-inf"
    assert encode_text(last_tree(4)) == "2-3,3-4,4-inf"
    assert encode_text(last_tree(5)) == "4-5,2-inf,3-inf,5-inf"
    for n in range(2, 11):
        final = None
        for _, t in list_stream(n):
            final = t
        assert last_tree(n).key() == final.key()


def test_descent_levels_bounded():
    # rank and unrank shed at least one active vertex per loop level
    rng = random.Random(7)
    for n in (50, 200, 500):
        total = count(n)
        ranks = {1, total, total // 2}
        ranks.update(rng.randrange(1, total + 1) for _ in range(40))
        for r in sorted(ranks):
            t, levels = _unrank_steps(n, r)
            assert levels <= max(n - 3, 1)
            back, levels = _rank_steps(t)
            assert back == r
            assert levels <= max(n - 3, 1)
