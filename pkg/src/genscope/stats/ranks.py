"""Midrank assignment, the substrate for the rank-based tests."""

from __future__ import annotations

import numpy as np

from ..base import as_float_array


def rank_with_ties(values) -> np.ndarray:
    """Ranks 1..N where tied values share the mean of their positions.

    The sum of the returned ranks is exactly N(N+1)/2 for every input.
    """
    arr = as_float_array(values, "values")
    order = np.argsort(arr, kind="stable")
    sorted_vals = arr[order]
    ranks = np.empty(arr.size, dtype=float)

    i = 0
    while i < arr.size:
        j = i
        while j + 1 < arr.size and sorted_vals[j + 1] == sorted_vals[i]:
            j += 1
        # positions i..j (0-based) hold one tie group; midrank is the mean
        # of ranks i+1 .. j+1
        midrank = (i + j) / 2.0 + 1.0
        ranks[order[i : j + 1]] = midrank
        i = j + 1
    return ranks


def tie_term(values) -> float:
    """Sum of t^3 - t over tie groups of size t."""
    arr = as_float_array(values, "values")
    _, counts = np.unique(arr, return_counts=True)
    t = counts.astype(float)
    return float(np.sum(t**3 - t))
