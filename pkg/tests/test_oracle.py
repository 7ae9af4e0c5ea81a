"""Brute force oracle and the structural listing checks."""

import pytest

from fantrees.core import path_tree, star_tree
from fantrees.engine import list_stream
from fantrees.greedy import greedy_listing
from fantrees.oracle import (brute_force_trees, check_engines_agree,
                             check_exhaustive, check_pivot_gray,
                             check_reversal)
from fantrees.ranking import count


def test_brute_force_counts():
    for n in range(2, 10):
        assert len(brute_force_trees(n)) == count(n)


def test_brute_force_contents():
    trees = brute_force_trees(4)
    assert "11100" in trees  # path tree
    assert "00111" in trees  # star
    assert "10110" not in trees  # cycle through the hub
    assert all(bits.count("1") == 3 for bits in trees)


def test_cap_enforced():
    with pytest.raises(ValueError):
        brute_force_trees(20)
    with pytest.raises(ValueError):
        check_exhaustive(20, [])
    with pytest.raises(ValueError):
        check_reversal(20)
    with pytest.raises(ValueError):
        check_engines_agree(20)


def test_gray_pass():
    trees = [t.copy() for _, t in list_stream(6)]
    report = check_pivot_gray(trees)
    assert report.is_gray
    assert report.length == 55
    assert report.first_violation is None


def test_gray_flags_bad_step():
    report = check_pivot_gray([path_tree(5), star_tree(5)])
    assert not report.is_gray
    assert report.first_violation == 1


def test_gray_singleton():
    report = check_pivot_gray([path_tree(2)])
    assert report.is_gray
    assert report.length == 1


def test_exhaustive_pass():
    for n in range(2, 9):
        report = check_exhaustive(n, (t for _, t in list_stream(n)))
        assert report.is_exhaustive, n
        assert report.length == count(n)
        assert report.duplicates == []


def test_exhaustive_flags_duplicate():
    trees = greedy_listing(path_tree(4))
    report = check_exhaustive(4, trees + [trees[0]])
    assert not report.is_exhaustive
    assert report.duplicates == [8]


def test_exhaustive_flags_truncation():
    # a greedy run that stalls early is caught by the set comparison
    from fantrees.core import reversed_path_tree

    report = check_exhaustive(6, greedy_listing(reversed_path_tree(6)))
    assert not report.is_exhaustive
    assert report.duplicates == []
    assert report.length == count(6) - 1


def test_reversal():
    for n in (2, 3, 5, 8):
        assert check_reversal(n)


def test_engines_agree():
    for n in range(2, 8):
        assert check_engines_agree(n)
