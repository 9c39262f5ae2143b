"""Pearson chi-square tests, phi / Cramer's V, and odds ratios."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field

import numpy as np

from ..errors import InputError, SchemaError
from .special import chi_square_sf

LOW_EXPECTED_THRESHOLD = 5.0


@dataclass
class ContingencyTable:
    """An r x c table of non-negative integer counts."""

    counts: np.ndarray
    row_labels: tuple[str, ...] = ()
    col_labels: tuple[str, ...] = ()

    def __post_init__(self):
        arr = np.asarray(self.counts)
        if arr.ndim != 2:
            raise InputError("contingency table must be 2-D")
        if np.any(arr < 0):
            raise InputError("contingency table counts must be >= 0")
        if np.any(arr != np.floor(arr)):
            raise InputError("contingency table counts must be integers")
        self.counts = arr.astype(np.int64)
        if not self.row_labels:
            self.row_labels = tuple(f"row{i}" for i in range(arr.shape[0]))
        if not self.col_labels:
            self.col_labels = tuple(f"col{j}" for j in range(arr.shape[1]))
        if len(self.row_labels) != arr.shape[0] or len(self.col_labels) != arr.shape[1]:
            raise InputError("label lengths must match table shape")
        if self.n == 0:
            raise InputError("contingency table is empty (grand total 0)")

    @property
    def n(self) -> int:
        return int(self.counts.sum())

    @property
    def row_totals(self) -> np.ndarray:
        return self.counts.sum(axis=1)

    @property
    def col_totals(self) -> np.ndarray:
        return self.counts.sum(axis=0)


def load_contingency_csv(path) -> ContingencyTable:
    """Read a labeled table: header row of column labels (first cell
    empty or a caption), then one row label plus counts per line."""
    with open(path, encoding="utf-8", newline="") as fh:
        rows = [row for row in csv.reader(fh) if row and any(c.strip() for c in row)]
    if len(rows) < 3:
        raise SchemaError("contingency CSV needs a header and at least 2 rows")
    col_labels = tuple(c.strip() for c in rows[0][1:])
    row_labels = []
    counts = []
    for line_number, row in enumerate(rows[1:], start=2):
        if len(row) != len(col_labels) + 1:
            raise SchemaError(
                f"line {line_number}: expected {len(col_labels)} counts"
            )
        row_labels.append(row[0].strip())
        try:
            counts.append([int(c) for c in row[1:]])
        except ValueError as exc:
            raise SchemaError(f"line {line_number}: {exc}") from None
    return ContingencyTable(
        np.array(counts), row_labels=tuple(row_labels), col_labels=col_labels
    )


@dataclass
class ChiSquareResult:
    chi2: float
    df: int
    p: float
    expected: np.ndarray
    min_expected: float
    phi: float | None = None  # signed, 2x2 only
    cramers_v: float | None = None
    low_expected_warning: bool = False
    cells: np.ndarray | None = None  # observed counts, for recomputation

    def summary(self) -> str:
        parts = [f"chi2({self.df}) = {self.chi2:.4f}", f"p = {self.p:.3g}"]
        if self.phi is not None:
            parts.append(f"phi = {self.phi:.4f}")
        if self.cramers_v is not None:
            parts.append(f"V = {self.cramers_v:.4f}")
        return ", ".join(parts)


@dataclass
class OddsRatioResult:
    odds_ratio: float
    ci_low: float
    ci_high: float
    cells: tuple[float, float, float, float]
    correction_applied: bool = False

    def summary(self) -> str:
        return (
            f"OR = {self.odds_ratio:.4f}, "
            f"95% CI [{self.ci_low:.4f}, {self.ci_high:.4f}]"
        )


def chi_square_gof(observed, expected=None) -> ChiSquareResult:
    """One-way goodness-of-fit test; expected defaults to uniform."""
    obs = np.asarray(observed, dtype=float).ravel()
    if obs.size < 2:
        raise InputError("goodness-of-fit needs at least 2 categories")
    if np.any(obs < 0):
        raise InputError("observed counts must be >= 0")
    total = obs.sum()
    if total == 0:
        raise InputError("observed counts are all zero")
    if expected is None:
        exp = np.full(obs.size, total / obs.size)
    else:
        exp = np.asarray(expected, dtype=float).ravel()
        if exp.size != obs.size:
            raise InputError("expected counts must match observed length")
        if np.any(exp <= 0):
            raise InputError("expected counts must be > 0")
        # accept expected given as proportions
        if not math.isclose(exp.sum(), total, rel_tol=1e-9):
            exp = exp * (total / exp.sum())
    chi2 = float(np.sum((obs - exp) ** 2 / exp))
    df = obs.size - 1
    return ChiSquareResult(
        chi2=chi2,
        df=df,
        p=chi_square_sf(chi2, df),
        expected=exp,
        min_expected=float(exp.min()),
        low_expected_warning=bool(exp.min() < LOW_EXPECTED_THRESHOLD),
        cells=obs.astype(np.int64),
    )


def chi_square_independence(table: ContingencyTable) -> ChiSquareResult:
    """Pearson chi-square test of independence on an r x c table.

    For 2x2 tables phi is signed by the sign of ad - bc; Cramer's V is
    always populated.
    """
    counts = table.counts.astype(float)
    r, c = counts.shape
    if r < 2 or c < 2:
        raise InputError("independence test needs at least a 2x2 table")
    row = table.row_totals.astype(float)
    col = table.col_totals.astype(float)
    if np.any(row == 0) or np.any(col == 0):
        raise InputError("zero row or column marginal")
    n = float(table.n)

    expected = np.outer(row, col) / n
    chi2 = float(np.sum((counts - expected) ** 2 / expected))
    df = (r - 1) * (c - 1)

    phi = None
    if (r, c) == (2, 2):
        a, b = counts[0]
        cc, d = counts[1]
        sign = 1.0 if (a * d - b * cc) >= 0 else -1.0
        phi = sign * math.sqrt(chi2 / n)
    cramers_v = math.sqrt(chi2 / (n * min(r - 1, c - 1)))

    return ChiSquareResult(
        chi2=chi2,
        df=df,
        p=chi_square_sf(chi2, df),
        expected=expected,
        min_expected=float(expected.min()),
        phi=phi,
        cramers_v=cramers_v,
        low_expected_warning=bool(expected.min() < LOW_EXPECTED_THRESHOLD),
        cells=table.counts,
    )


def odds_ratio(a, b, c, d, z_crit: float = 1.959964) -> OddsRatioResult:
    """Odds ratio ad/(bc) with a log-normal 95% confidence interval.

    Zero cells get the Haldane-Anscombe +0.5 correction applied to all
    four cells before anything is computed.
    """
    cells = (a, b, c, d)
    if any(v < 0 for v in cells):
        raise InputError("cell counts must be >= 0")
    corrected = any(v == 0 for v in cells)
    if corrected:
        a, b, c, d = (v + 0.5 for v in cells)
    orr = (a * d) / (b * c)
    se = math.sqrt(1.0 / a + 1.0 / b + 1.0 / c + 1.0 / d)
    log_or = math.log(orr)
    return OddsRatioResult(
        odds_ratio=orr,
        ci_low=math.exp(log_or - z_crit * se),
        ci_high=math.exp(log_or + z_crit * se),
        cells=(float(a), float(b), float(c), float(d)),
        correction_applied=corrected,
    )
