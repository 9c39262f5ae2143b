import numpy as np
import pytest

from genscope.errors import InputError
from genscope.stats import rank_with_ties, tie_term


def test_midrank_convention():
    assert rank_with_ties([10, 20, 20, 30]).tolist() == [1, 2.5, 2.5, 4]


def test_distinct_sorted_values():
    assert rank_with_ties([1, 2, 3, 4, 5]).tolist() == [1, 2, 3, 4, 5]


def test_all_equal():
    assert rank_with_ties([7, 7, 7, 7, 7]).tolist() == [3, 3, 3, 3, 3]


def test_rank_sum_conservation():
    rng = np.random.RandomState(11)
    for _ in range(200):
        n = rng.randint(1, 60)
        vals = rng.randint(0, 8, size=n)  # heavy ties
        ranks = rank_with_ties(vals)
        assert ranks.sum() == pytest.approx(n * (n + 1) / 2, abs=0.0)


def test_non_finite_rejected():
    with pytest.raises(InputError):
        rank_with_ties([1.0, float("nan")])
    with pytest.raises(InputError):
        rank_with_ties([1.0, float("inf")])


def test_tie_term():
    # two ties of size 2: 2*(8-2) = 12
    assert tie_term([1, 1, 2, 2, 3]) == 12.0
    assert tie_term([1, 2, 3]) == 0.0
