"""Kolmogorov-Smirnov check against a moment-fitted normal."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..base import as_float_array
from ..errors import DegenerateDataError, InputError
from .special import kolmogorov_sf, normal_sf


@dataclass
class KSResult:
    d: float
    p: float  # asymptotic; approximate because mu/sigma are estimated
    n: int
    mu: float
    sigma: float
    approximate: bool = True

    def summary(self) -> str:
        return f"D = {self.d:.4f}, p = {self.p:.3g} (asymptotic, params estimated)"


def ks_normality(sample, min_n: int = 8) -> KSResult:
    """Supremum distance between the empirical CDF and a fitted normal.

    The reference normal uses the sample moments; the p-value comes from
    the asymptotic Kolmogorov distribution and is flagged approximate
    since the parameters were estimated from the same data.
    """
    x = as_float_array(sample, "sample")
    n = x.size
    if n < min_n:
        raise InputError(f"need at least {min_n} observations, got {n}")
    mu = float(x.mean())
    sigma = float(x.std())
    if sigma == 0.0:
        raise DegenerateDataError("constant sample: sigma is zero")

    xs = np.sort(x)
    cdf = np.array([1.0 - normal_sf((v - mu) / sigma) for v in xs])
    upper = np.arange(1, n + 1) / n
    lower = np.arange(0, n) / n
    d = float(max(np.max(np.abs(upper - cdf)), np.max(np.abs(cdf - lower))))
    return KSResult(
        d=d,
        p=kolmogorov_sf(math.sqrt(n) * d),
        n=n,
        mu=mu,
        sigma=sigma,
    )
