"""Three-way sentiment, via external labels or the bundled valence lexicon.

External labels (one JSON object per line with ``id`` and ``sentiment``)
always take precedence; the lexicon scorer only backfills tweets without
one, so the transformer-based provider stays swappable without touching
the pipeline.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .classifier.features import tokenize
from .errors import InputError, SchemaError

logger = logging.getLogger(__name__)

NEGATIVE = "negative"
NEUTRAL = "neutral"
POSITIVE = "positive"
SENTIMENTS = (NEGATIVE, NEUTRAL, POSITIVE)

DEFAULT_NEUTRAL_BAND = 0.05
DEFAULT_NEGATION_WINDOW = 3


@dataclass(frozen=True)
class SentimentLabel:
    value: str  # negative | neutral | positive
    source: str  # external | lexicon

    def __post_init__(self):
        if self.value not in SENTIMENTS:
            raise InputError(f"unknown sentiment {self.value!r}")
        if self.source not in ("external", "lexicon"):
            raise InputError(f"unknown sentiment source {self.source!r}")


@dataclass
class ValenceLexicon:
    valences: dict[str, float]
    negations: frozenset[str]
    neutral_band: float = DEFAULT_NEUTRAL_BAND
    negation_window: int = DEFAULT_NEGATION_WINDOW

    def __post_init__(self):
        if not 0.0 < self.neutral_band < 1.0:
            raise InputError("neutral_band must be in (0, 1)")
        bad = {t: v for t, v in self.valences.items() if not -1.0 <= v <= 1.0}
        if bad:
            raise SchemaError(f"valences outside [-1, 1]: {sorted(bad)}")


def load_valence_lexicon(path=None, **kwargs) -> ValenceLexicon:
    """``token<TAB>valence`` per line; negation tokens are prefixed ``!``."""
    if path is None:
        path = resources.files("genscope.data") / "valence_lexicon.tsv"
    valences: dict[str, float] = {}
    negations: set[str] = set()
    for line_number, raw in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("!"):
            negations.add(line[1:].strip().lower())
            continue
        token, _, value = line.partition("\t")
        if not token or not value:
            raise SchemaError(f"line {line_number}: expected 'token<TAB>valence'")
        try:
            valences[token.strip().lower()] = float(value)
        except ValueError:
            raise SchemaError(f"line {line_number}: bad valence {value!r}") from None
    return ValenceLexicon(valences=valences, negations=frozenset(negations), **kwargs)


def lexicon_score(text: str, lexicon: ValenceLexicon) -> SentimentLabel:
    """Mean matched valence, sign-flipped inside a negation window.

    positive if the mean exceeds the neutral band, negative below it,
    neutral otherwise (including texts with no lexicon tokens at all).
    """
    tokens = tokenize(text)
    flip_until = -1
    total = 0.0
    hits = 0
    for i, token in enumerate(tokens):
        if token in lexicon.negations:
            flip_until = i + lexicon.negation_window
            continue
        valence = lexicon.valences.get(token)
        if valence is None:
            continue
        if i <= flip_until:
            valence = -valence
        total += valence
        hits += 1
    score = total / hits if hits else 0.0
    if score > lexicon.neutral_band:
        value = POSITIVE
    elif score < -lexicon.neutral_band:
        value = NEGATIVE
    else:
        value = NEUTRAL
    return SentimentLabel(value=value, source="lexicon")


@dataclass
class ExternalLabelReport:
    labels: dict[str, SentimentLabel] = field(default_factory=dict)
    rejected: list[tuple[int, str]] = field(default_factory=list)


def load_external_labels(source) -> ExternalLabelReport:
    """JSON Lines of ``{"id": ..., "sentiment": ...}``; bad lines are
    collected per line, duplicates rejected."""
    if isinstance(source, (str, Path)):
        stream = open(source, encoding="utf-8")
        close = True
    else:
        stream, close = source, False
    report = ExternalLabelReport()
    try:
        for line_number, line in enumerate(stream, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                report.rejected.append((line_number, f"invalid JSON: {exc.msg}"))
                continue
            tweet_id = obj.get("id")
            sentiment = obj.get("sentiment")
            if not isinstance(tweet_id, str) or not tweet_id:
                report.rejected.append((line_number, "missing id"))
                continue
            if sentiment not in SENTIMENTS:
                report.rejected.append(
                    (line_number, f"unknown sentiment {sentiment!r}")
                )
                continue
            if tweet_id in report.labels:
                report.rejected.append((line_number, "duplicate id"))
                continue
            report.labels[tweet_id] = SentimentLabel(value=sentiment, source="external")
    finally:
        if close:
            stream.close()
    return report


class SentimentProvider:
    """External labels first, lexicon fallback; every tweet gets a label."""

    def __init__(
        self,
        external: dict[str, SentimentLabel] | None = None,
        lexicon: ValenceLexicon | None = None,
    ):
        self.external = external or {}
        self.lexicon = lexicon or load_valence_lexicon()

    def label(self, tweet) -> SentimentLabel:
        hit = self.external.get(tweet.id)
        if hit is not None:
            return hit
        return lexicon_score(tweet.text, self.lexicon)
