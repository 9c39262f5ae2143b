"""Non-parametric hypothesis tests, effect sizes, and special functions."""

from .contingency import (
    ContingencyTable,
    ChiSquareResult,
    OddsRatioResult,
    chi_square_gof,
    chi_square_independence,
    load_contingency_csv,
    odds_ratio,
)
from .normality import KSResult, ks_normality
from .ranks import rank_with_ties, tie_term
from .rank_tests import (
    DunnResult,
    KruskalWallisResult,
    MannWhitneyResult,
    dunn_posthoc,
    kruskal_wallis,
    mann_whitney_u,
)
from .special import (
    chi_square_sf,
    erfc,
    kolmogorov_sf,
    normal_sf,
    regularized_gamma_p,
    regularized_gamma_q,
)

__all__ = [
    "ContingencyTable",
    "ChiSquareResult",
    "OddsRatioResult",
    "chi_square_gof",
    "chi_square_independence",
    "load_contingency_csv",
    "odds_ratio",
    "KSResult",
    "ks_normality",
    "rank_with_ties",
    "tie_term",
    "DunnResult",
    "KruskalWallisResult",
    "MannWhitneyResult",
    "dunn_posthoc",
    "kruskal_wallis",
    "mann_whitney_u",
    "chi_square_sf",
    "erfc",
    "kolmogorov_sf",
    "normal_sf",
    "regularized_gamma_p",
    "regularized_gamma_q",
]
