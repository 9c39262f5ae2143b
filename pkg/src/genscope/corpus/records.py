"""Tweet records and JSON Lines ingestion.

The corpus format is JSON Lines, one object per tweet with keys ``id``,
``text``, ``like_count``, ``retweet_count``, ``lang`` plus optional
``possibly_sensitive`` and ``created_at``. Unknown keys are ignored.
Directive filters from a query (e.g. ``-is:retweet``) are applied at
ingest time when a record carries the matching optional boolean key
(``is_retweet`` etc.); records without that metadata pass through with a
one-time warning.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import SchemaError
from .query import QueryAst

logger = logging.getLogger(__name__)

# optional per-record metadata keys that mirror the query directives
_DIRECTIVE_KEYS = {
    "has:links": "has_links",
    "has:mentions": "has_mentions",
    "is:retweet": "is_retweet",
    "is:reply": "is_reply",
    "is:nullcast": "is_nullcast",
}


@dataclass
class Tweet:
    id: str
    text: str
    like_count: int
    retweet_count: int
    lang: str
    possibly_sensitive: bool = False
    created_at: str | None = None


@dataclass
class RejectedRecord:
    line_number: int
    reason: str
    raw: str = ""


@dataclass
class IngestReport:
    tweets: list[Tweet] = field(default_factory=list)
    rejected: list[RejectedRecord] = field(default_factory=list)

    @property
    def accepted_count(self) -> int:
        return len(self.tweets)

    @property
    def rejected_count(self) -> int:
        return len(self.rejected)


def _parse_record(obj: dict) -> Tweet:
    if not isinstance(obj, dict):
        raise ValueError("record must be a JSON object")

    tweet_id = obj.get("id")
    if not isinstance(tweet_id, str) or not tweet_id:
        raise ValueError("missing or empty id")

    text = obj.get("text")
    if not isinstance(text, str) or not text.strip():
        raise ValueError("missing or empty text")

    counts = {}
    for key in ("like_count", "retweet_count"):
        value = obj.get(key)
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValueError(f"missing or non-integer {key}")
        if value < 0:
            raise ValueError("negative count")
        counts[key] = value

    lang = obj.get("lang")
    if not isinstance(lang, str) or not lang:
        raise ValueError("missing or empty lang")

    sensitive = obj.get("possibly_sensitive", False)
    if not isinstance(sensitive, bool):
        raise ValueError("possibly_sensitive must be boolean")

    created_at = obj.get("created_at")
    if created_at is not None and not isinstance(created_at, str):
        raise ValueError("created_at must be a string")

    return Tweet(
        id=tweet_id,
        text=text,
        like_count=counts["like_count"],
        retweet_count=counts["retweet_count"],
        lang=lang,
        possibly_sensitive=sensitive,
        created_at=created_at,
    )


def ingest(source, query: QueryAst | None = None) -> IngestReport:
    """Read and validate a JSON Lines corpus.

    ``source`` may be a path or a text stream. Per-line schema violations
    and duplicate ids are collected in the report, never fatal; only an
    unreadable source raises.
    """
    if isinstance(source, (str, Path)):
        try:
            stream = open(source, encoding="utf-8")
        except OSError as exc:
            raise SchemaError(f"cannot read corpus: {exc}") from exc
        close = True
    else:
        stream, close = source, False

    report = IngestReport()
    seen_ids: set[str] = set()
    warned_directives: set[str] = set()
    try:
        for line_number, line in enumerate(stream, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                report.rejected.append(
                    RejectedRecord(line_number, f"invalid JSON: {exc.msg}", line[:200])
                )
                continue
            try:
                tweet = _parse_record(obj)
            except ValueError as exc:
                report.rejected.append(RejectedRecord(line_number, str(exc), line[:200]))
                continue

            if tweet.id in seen_ids:
                report.rejected.append(RejectedRecord(line_number, "duplicate id", line[:200]))
                continue

            if query is not None:
                verdict = _apply_directives(obj, query, warned_directives)
                if verdict is not None:
                    report.rejected.append(RejectedRecord(line_number, verdict, line[:200]))
                    continue

            seen_ids.add(tweet.id)
            report.tweets.append(tweet)
    finally:
        if close:
            stream.close()
    return report


def _apply_directives(obj: dict, query: QueryAst, warned: set[str]) -> str | None:
    """Returns a rejection reason when a directive filters this record."""
    for op in query.operators:
        key = _DIRECTIVE_KEYS[op.name]
        if key not in obj:
            if op.name not in warned:
                warned.add(op.name)
                logger.warning(
                    "directive %s skipped: records lack the %r field",
                    op.render(), key,
                )
            continue
        value = bool(obj[key])
        if op.negated and value:
            return f"filtered by {op.render()}"
        if not op.negated and not value:
            return f"filtered by {op.render()}"
    return None


def read_jsonl(source):
    """Yield (line_number, object) pairs from a JSON Lines file or stream."""
    if isinstance(source, (str, Path)):
        stream = open(source, encoding="utf-8")
        close = True
    else:
        stream, close = source, False
    try:
        for line_number, line in enumerate(stream, start=1):
            line = line.strip()
            if line:
                yield line_number, json.loads(line)
    finally:
        if close:
            stream.close()


def write_jsonl(records, target) -> None:
    """Write dicts as JSON Lines with a stable key order."""
    if isinstance(target, (str, Path)):
        stream = open(target, "w", encoding="utf-8", newline="\n")
        close = True
    else:
        stream, close = target, False
    try:
        for record in records:
            stream.write(json.dumps(record, ensure_ascii=False, sort_keys=True) + "\n")
    finally:
        if close:
            stream.close()
