"""Binary accuracy, F1, and rank-based (midrank) ROC AUC."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..base import as_float_array, check_binary_labels, check_consistent_length
from ..errors import InputError
from ..stats.ranks import rank_with_ties


@dataclass
class EvalMetrics:
    binary_accuracy: float
    auc: float
    f1: float
    tp: int
    fp: int
    tn: int
    fn: int
    threshold: float

    def summary(self) -> str:
        return (
            f"accuracy = {self.binary_accuracy:.4f}, auc = {self.auc:.4f}, "
            f"f1 = {self.f1:.4f}"
        )


def roc_auc(scores, labels) -> float:
    """AUC as P(score+ > score-) + 0.5 * P(tie), by the midrank formula."""
    s = as_float_array(scores, "scores")
    y = check_binary_labels(labels)
    check_consistent_length(s, y)
    n_pos = int(y.sum())
    n_neg = int(y.size - n_pos)
    if n_pos == 0 or n_neg == 0:
        raise InputError("AUC needs at least one positive and one negative label")
    ranks = rank_with_ties(s)
    pos_rank_sum = float(ranks[y == 1].sum())
    return (pos_rank_sum - n_pos * (n_pos + 1) / 2.0) / (n_pos * n_neg)


def evaluate(scores, labels, threshold: float = 0.5) -> EvalMetrics:
    """Confusion counts, accuracy, and F1 at the threshold, plus AUC.

    A score exactly at the threshold counts as a positive call.
    """
    s = as_float_array(scores, "scores")
    y = check_binary_labels(labels)
    check_consistent_length(s, y)
    pred = s >= threshold
    tp = int(np.sum(pred & (y == 1)))
    fp = int(np.sum(pred & (y == 0)))
    tn = int(np.sum(~pred & (y == 0)))
    fn = int(np.sum(~pred & (y == 1)))
    accuracy = (tp + tn) / y.size
    f1 = 2 * tp / (2 * tp + fp + fn) if (2 * tp + fp + fn) > 0 else 0.0
    return EvalMetrics(
        binary_accuracy=accuracy,
        auc=roc_auc(s, y),
        f1=f1,
        tp=tp,
        fp=fp,
        tn=tn,
        fn=fn,
        threshold=threshold,
    )
