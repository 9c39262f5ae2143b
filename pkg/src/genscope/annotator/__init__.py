"""Rule-based social-generics annotation."""

from .lexicons import RuleLexicons, load_wordlist
from .normalize import NormalizedText, Token, load_abbreviations, normalize
from .rules import (
    GENERIC,
    NON_GENERIC,
    AnnotatorVerdict,
    RuleAnnotator,
    batch_annotate,
    classify_generic,
)

__all__ = [
    "RuleLexicons",
    "load_wordlist",
    "NormalizedText",
    "Token",
    "load_abbreviations",
    "normalize",
    "GENERIC",
    "NON_GENERIC",
    "AnnotatorVerdict",
    "RuleAnnotator",
    "batch_annotate",
    "classify_generic",
]
