import math

import numpy as np
import pytest

from genscope.errors import DegenerateDataError, InputError
from genscope.stats import ks_normality
from genscope.stats.special import normal_sf


def _normal_quantile(p, lo=-10.0, hi=10.0):
    # bisection on the survival function; plenty accurate for test data
    for _ in range(200):
        mid = (lo + hi) / 2.0
        if 1.0 - normal_sf(mid) < p:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2.0


def test_near_normal_sample_not_rejected():
    n = 100
    sample = [_normal_quantile((i - 0.5) / n) for i in range(1, n + 1)]
    res = ks_normality(sample)
    assert res.d < 0.05
    assert res.p > 0.05
    assert res.approximate


def test_skewed_sample_rejected():
    n = 1000
    sample = [-math.log(1.0 - (i - 0.5) / n) for i in range(1, n + 1)]  # Exp(1) quantiles
    res = ks_normality(sample)
    assert res.p < 0.05


def test_constant_sample_degenerate():
    with pytest.raises(DegenerateDataError):
        ks_normality([3.0] * 20)


def test_minimum_sample_size():
    with pytest.raises(InputError):
        ks_normality([1.0, 2.0, 3.0])


def test_d_in_unit_interval():
    rng = np.random.RandomState(2)
    for _ in range(20):
        res = ks_normality(rng.rand(30))
        assert 0.0 <= res.d <= 1.0
        assert 0.0 <= res.p <= 1.0
