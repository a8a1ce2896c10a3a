"""The cancellation maps: unit examples plus the exhaustive suite."""

import pytest

from weylruns.errors import DomainError
from weylruns.involutions import (
    cross_resign_12,
    flip_smallest,
    resign_large_pair,
    reverse_last_pair,
    run_involution_suite,
    swap_adjacent_pair,
    swap_far_pair,
)
from weylruns.perm_core import inv_b, inv_d, is_alternating, peaks_valleys_b


def test_swap_far_pair_same_sign():
    w = (4, 1, 2, 3, 5)
    img = swap_far_pair(w)
    assert img == (5, 1, 2, 3, 4)
    assert swap_far_pair(img) == w
    assert peaks_valleys_b(img) == peaks_valleys_b(w)
    assert (inv_b(w) - inv_b(img)) % 2 == 1


def test_swap_far_pair_mixed_sign():
    w = (-4, 1, 2, 5, 3)
    assert swap_far_pair(w) == (-5, 1, 2, 4, 3)
    with pytest.raises(DomainError):
        swap_far_pair((1, 2, 4, 5, 3))  # adjacent pair


def test_swap_adjacent_pair():
    w = (1, 4, 5, 2, 3)
    img = swap_adjacent_pair(w)
    assert img == (1, 5, 4, 2, 3)
    assert swap_adjacent_pair(img) == w
    with pytest.raises(DomainError):
        swap_adjacent_pair((4, 1, 2, 3, 5))


def test_reverse_last_pair():
    assert reverse_last_pair((1, 2, 4, 5)) == (1, 2, -5, -4)
    assert reverse_last_pair((1, 2, -5, -4)) == (1, 2, 4, 5)


def test_resign_large_pair():
    w = (1, 5, 2, -4, 3)
    img = resign_large_pair(w)
    assert img == (1, 4, 2, -5, 3)
    assert resign_large_pair(img) == w
    assert (inv_d(w) - inv_d(img)) % 2 == 1
    with pytest.raises(DomainError):
        resign_large_pair((1, 5, 2, 4, 3))


def test_flip_smallest():
    w = (3, -1, 2)
    assert flip_smallest(w) == (3, 1, 2)
    assert flip_smallest(flip_smallest(w)) == w


def test_cross_resign_12():
    w = (3, 1, -2)
    img = cross_resign_12(w)
    assert img == (3, 2, -1)
    assert cross_resign_12(img) == w
    assert is_alternating(img) == is_alternating(w)


@pytest.mark.parametrize("n", range(1, 6))
def test_involution_suite_small(n):
    assert run_involution_suite(n) == []
