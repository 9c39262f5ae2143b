"""L2-regularized logistic regression trained by full-batch gradient descent.

Training is deterministic: zero initialization, full-batch updates, and a
halving-on-increase learning-rate safeguard that keeps the loss curve
non-increasing. The bias is never regularized.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..base import (
    ParamsMixin,
    as_feature_matrix,
    check_binary_labels,
    check_consistent_length,
    check_fitted,
)
from ..errors import InputError, TrainingError
from .features import (
    BagOfWordsVectorizer,
    SparseVector,
    Vocabulary,
    stack_features,
)

GENERIC = "generic"
NON_GENERIC = "non_generic"

DEFAULT_LEARNING_RATE = 0.1
DEFAULT_EPOCHS = 500
DEFAULT_L2 = 1e-4
DEFAULT_SEED = 42
DEFAULT_THRESHOLD = 0.5
DEFAULT_MIN_COUNT = 2


def sigmoid(z):
    z = np.asarray(z, dtype=float)
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def loss_and_gradient(weights, bias, features, labels, l2):
    """Mean cross-entropy plus (l2/2)*||w||^2, with its exact gradient."""
    x = as_feature_matrix(features)
    y = np.asarray(labels, dtype=float)
    w = np.asarray(weights, dtype=float)
    n = x.shape[0]
    z = x @ w + bias
    # -ln sigma(z) = logaddexp(0, -z); -ln(1 - sigma(z)) = logaddexp(0, z)
    ce = float(np.mean(y * np.logaddexp(0.0, -z) + (1.0 - y) * np.logaddexp(0.0, z)))
    loss = ce + 0.5 * l2 * float(w @ w)
    residual = sigmoid(z) - y
    grad_w = x.T @ residual / n + l2 * w
    grad_b = float(residual.mean())
    return loss, grad_w, grad_b


@dataclass
class GenericityModel:
    """Trained scorer: weights, bias, decision threshold, and provenance."""

    feature_kind: str  # "bow" or "embedding"
    weights: np.ndarray
    bias: float
    threshold: float = DEFAULT_THRESHOLD
    l2: float = DEFAULT_L2
    seed: int = DEFAULT_SEED
    learning_rate: float = DEFAULT_LEARNING_RATE
    epochs: int = DEFAULT_EPOCHS
    vocab: Vocabulary | None = None
    loss_history: list[float] = field(default_factory=list, repr=False)

    def __post_init__(self):
        self.weights = np.asarray(self.weights, dtype=float)
        if self.feature_kind not in ("bow", "embedding"):
            raise InputError(f"unknown feature_kind {self.feature_kind!r}")
        if not 0.0 < self.threshold < 1.0:
            raise InputError("threshold must be in (0, 1)")
        if self.vocab is not None and self.vocab.size != self.weights.size:
            raise InputError("vocabulary size does not match weight length")

    @property
    def dimension(self) -> int:
        return int(self.weights.size)


def train_logistic(
    features,
    labels,
    l2: float = DEFAULT_L2,
    learning_rate: float = DEFAULT_LEARNING_RATE,
    epochs: int = DEFAULT_EPOCHS,
    seed: int = DEFAULT_SEED,
    threshold: float = DEFAULT_THRESHOLD,
    batch_policy: str = "full",
    feature_kind: str = "bow",
    vocab: Vocabulary | None = None,
) -> GenericityModel:
    """Fit weights by deterministic full-batch gradient descent.

    The learning rate halves whenever a step would increase the loss, so
    the recorded loss history is non-increasing. Only the "full" batch
    policy is implemented; it needs no shuffling, so the seed is recorded
    as provenance only.
    """
    if batch_policy != "full":
        raise InputError(f"unsupported batch policy {batch_policy!r}; use 'full'")
    x = as_feature_matrix(features)
    y = check_binary_labels(labels)
    check_consistent_length(x, y)
    if y.sum() == 0 or y.sum() == y.size:
        raise InputError("need at least one example of each label")
    if l2 < 0:
        raise InputError("l2 penalty must be >= 0")
    if learning_rate <= 0 or epochs < 1:
        raise InputError("learning_rate must be > 0 and epochs >= 1")

    w = np.zeros(x.shape[1])
    b = 0.0
    eta = float(learning_rate)
    loss, grad_w, grad_b = loss_and_gradient(w, b, x, y, l2)
    history = [loss]

    for _ in range(epochs):
        while True:
            w_next = w - eta * grad_w
            b_next = b - eta * grad_b
            loss_next, gw_next, gb_next = loss_and_gradient(w_next, b_next, x, y, l2)
            if not math.isfinite(loss_next):
                raise TrainingError(
                    f"non-finite loss (eta={eta}, epoch={len(history)}); "
                    "check feature scaling"
                )
            if loss_next <= loss or eta < 1e-12:
                break
            eta /= 2.0
        w, b, loss, grad_w, grad_b = w_next, b_next, loss_next, gw_next, gb_next
        history.append(loss)

    return GenericityModel(
        feature_kind=feature_kind,
        weights=w,
        bias=b,
        threshold=threshold,
        l2=l2,
        seed=seed,
        learning_rate=learning_rate,
        epochs=epochs,
        vocab=vocab,
        loss_history=history,
    )


def predict_score(model: GenericityModel, features):
    """Genericity score sigma(w.x + b) in [0, 1].

    Accepts one SparseVector or dense vector (returns a float) or a list
    of SparseVectors / a 2-D matrix (returns an array of scores).
    """
    if isinstance(features, SparseVector):
        arr = features.to_dense()
    elif isinstance(features, (list, tuple)) and any(
        isinstance(f, SparseVector) for f in features
    ):
        arr = stack_features(features)
    else:
        arr = np.asarray(features, dtype=float)
    single = arr.ndim == 1
    x = as_feature_matrix(arr)
    if x.shape[1] != model.dimension:
        raise InputError(
            f"feature dimension {x.shape[1]} does not match model "
            f"dimension {model.dimension}"
        )
    scores = sigmoid(x @ model.weights + model.bias)
    return float(scores[0]) if single else scores


def classify(model: GenericityModel, features, threshold: float | None = None):
    """Binary decision: generic iff score >= threshold (default: model's)."""
    tau = model.threshold if threshold is None else threshold
    if not 0.0 < tau < 1.0:
        raise InputError("threshold must be in (0, 1)")
    scores = predict_score(model, features)
    if isinstance(scores, float):
        return scores >= tau
    return scores >= tau


class GenericityClassifier(ParamsMixin):
    """Text-in classifier: bag-of-words features + logistic regression.

    Follows the estimator convention: constructor stores hyperparameters,
    ``fit(texts, labels)`` learns ``model_``, ``predict_proba`` returns
    the genericity score, and ``predict`` applies the decision threshold.
    """

    def __init__(
        self,
        min_count: int = DEFAULT_MIN_COUNT,
        learning_rate: float = DEFAULT_LEARNING_RATE,
        epochs: int = DEFAULT_EPOCHS,
        l2: float = DEFAULT_L2,
        seed: int = DEFAULT_SEED,
        threshold: float = DEFAULT_THRESHOLD,
    ):
        self.min_count = min_count
        self.learning_rate = learning_rate
        self.epochs = epochs
        self.l2 = l2
        self.seed = seed
        self.threshold = threshold

    def fit(self, texts, labels):
        texts = list(texts)
        y = check_binary_labels(labels)
        check_consistent_length(texts, y)
        self.vectorizer_ = BagOfWordsVectorizer(min_count=self.min_count)
        x = self.vectorizer_.fit_transform(texts)
        self.model_ = train_logistic(
            x,
            y,
            l2=self.l2,
            learning_rate=self.learning_rate,
            epochs=self.epochs,
            seed=self.seed,
            threshold=self.threshold,
            feature_kind="bow",
            vocab=self.vectorizer_.vocabulary_,
        )
        return self

    def predict_proba(self, texts) -> np.ndarray:
        check_fitted(self, "model_")
        return predict_score(self.model_, self.vectorizer_.transform(texts))

    def predict(self, texts) -> np.ndarray:
        return (self.predict_proba(texts) >= self.threshold).astype(int)

    def score(self, texts, labels) -> float:
        y = check_binary_labels(labels)
        return float(np.mean(self.predict(texts) == y))
