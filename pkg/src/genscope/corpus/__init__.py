"""Corpus ingestion, query parsing, and group partitioning."""

from .groups import (
    GROUPS,
    GroupLexicon,
    PartitionedCorpus,
    load_group_lexicon,
    match_groups,
    partition,
)
from .query import DIRECTIVES, Directive, QueryAst, load_query, parse_query
from .records import (
    IngestReport,
    RejectedRecord,
    Tweet,
    ingest,
    read_jsonl,
    write_jsonl,
)

__all__ = [
    "GROUPS",
    "GroupLexicon",
    "PartitionedCorpus",
    "load_group_lexicon",
    "match_groups",
    "partition",
    "DIRECTIVES",
    "Directive",
    "QueryAst",
    "load_query",
    "parse_query",
    "IngestReport",
    "RejectedRecord",
    "Tweet",
    "ingest",
    "read_jsonl",
    "write_jsonl",
]
