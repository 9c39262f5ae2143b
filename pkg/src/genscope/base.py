"""Estimator plumbing: parameter introspection and input validation.

Estimators in this package follow the scikit-learn convention: constructor
arguments are stored verbatim as attributes of the same name, fitted state
gets a trailing underscore, and ``get_params``/``set_params`` expose the
constructor arguments so the estimators compose with pipeline and
grid-search tooling without a scikit-learn dependency.
"""

from __future__ import annotations

import inspect

import numpy as np

from .errors import InputError


class ParamsMixin:
    """get_params/set_params backed by the signature of ``__init__``."""

    @classmethod
    def _param_names(cls):
        sig = inspect.signature(cls.__init__)
        return [name for name in sig.parameters if name != "self"]

    def get_params(self, deep=True):
        return {name: getattr(self, name) for name in self._param_names()}

    def set_params(self, **params):
        valid = set(self._param_names())
        for name, value in params.items():
            if name not in valid:
                raise InputError(
                    f"invalid parameter {name!r} for {type(self).__name__}; "
                    f"valid parameters are {sorted(valid)}"
                )
            setattr(self, name, value)
        return self

    def __repr__(self):
        args = ", ".join(f"{k}={v!r}" for k, v in self.get_params().items())
        return f"{type(self).__name__}({args})"


def check_fitted(estimator, attribute):
    if not hasattr(estimator, attribute):
        raise InputError(
            f"{type(estimator).__name__} is not fitted; call fit() first"
        )


def as_float_array(values, name="values", allow_empty=False):
    """Coerce to a 1-D float array, rejecting non-finite entries."""
    arr = np.asarray(values, dtype=float).ravel()
    if not allow_empty and arr.size == 0:
        raise InputError(f"{name} must be non-empty")
    if arr.size and not np.all(np.isfinite(arr)):
        raise InputError(f"{name} contains non-finite values")
    return arr


def as_feature_matrix(features, name="features"):
    """Coerce to a 2-D float matrix; a single vector becomes one row."""
    arr = np.asarray(features, dtype=float)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.ndim != 2:
        raise InputError(f"{name} must be a vector or a 2-D matrix")
    if not np.all(np.isfinite(arr)):
        raise InputError(f"{name} contains non-finite values")
    return arr


def check_binary_labels(labels, name="labels"):
    arr = np.asarray(labels)
    if arr.ndim != 1:
        raise InputError(f"{name} must be 1-D")
    bad = set(np.unique(arr)) - {0, 1}
    if bad:
        raise InputError(f"{name} must be 0/1; found {sorted(bad)}")
    return arr.astype(np.int64)


def check_consistent_length(*arrays):
    lengths = {len(a) for a in arrays}
    if len(lengths) > 1:
        raise InputError(f"inconsistent lengths: {sorted(lengths)}")
