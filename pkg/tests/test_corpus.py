import io
import json

import pytest

from genscope.corpus import (
    GroupLexicon,
    Tweet,
    ingest,
    load_group_lexicon,
    match_groups,
    parse_query,
    partition,
)
from genscope.errors import SchemaError


def _jsonl(*objs):
    return io.StringIO("\n".join(json.dumps(o) for o in objs) + "\n")


def _record(i, text="hello democrats", **kw):
    base = {
        "id": str(i),
        "text": text,
        "like_count": 1,
        "retweet_count": 0,
        "lang": "en",
    }
    base.update(kw)
    return base


def _tweet(text, lang="en", i="t1"):
    return Tweet(id=i, text=text, like_count=0, retweet_count=0, lang=lang)


LEX = GroupLexicon(
    entries={
        "democrats": frozenset({"political"}),
        "liberals": frozenset({"political"}),
        "trans": frozenset({"gender"}),
        "black people": frozenset({"ethnic"}),
        "white men": frozenset({"ethnic"}),
    }
)
AST = parse_query("(democrats OR liberals OR trans OR (black people) OR (white men))")


class TestIngest:
    def test_three_valid_lines(self):
        report = ingest(_jsonl(_record(1), _record(2), _record(3)))
        assert report.accepted_count == 3
        assert report.rejected_count == 0

    def test_duplicate_id(self):
        report = ingest(_jsonl(_record(1), _record(1)))
        assert report.accepted_count == 1
        assert report.rejected[0].reason == "duplicate id"

    def test_negative_count(self):
        report = ingest(_jsonl(_record(1, like_count=-1)))
        assert report.accepted_count == 0
        assert report.rejected[0].reason == "negative count"

    def test_schema_violations_not_fatal(self):
        report = ingest(
            _jsonl(_record(1), {"id": "x"}, _record(2, text="   ")), None
        )
        assert report.accepted_count == 1
        assert report.rejected_count == 2

    def test_invalid_json_line(self):
        report = ingest(io.StringIO('{"id": "1"\nnot json\n'))
        assert report.accepted_count == 0
        assert all("invalid JSON" in r.reason for r in report.rejected)

    def test_unknown_keys_ignored(self):
        report = ingest(_jsonl(_record(1, extra_field="zzz")))
        assert report.accepted_count == 1

    def test_unreadable_source_fatal(self, tmp_path):
        with pytest.raises(SchemaError):
            ingest(tmp_path / "missing.jsonl")

    def test_directive_filters_when_metadata_present(self):
        ast = parse_query("(democrats) -is:retweet")
        report = ingest(
            _jsonl(_record(1, is_retweet=True), _record(2, is_retweet=False), _record(3)),
            query=ast,
        )
        assert [t.id for t in report.tweets] == ["2", "3"]
        assert report.rejected[0].reason == "filtered by -is:retweet"

    def test_bool_not_accepted_as_count(self):
        report = ingest(_jsonl(_record(1, like_count=True)))
        assert report.accepted_count == 0


class TestMatchGroups:
    def test_political_keyword(self):
        got = match_groups(AST, LEX, _tweet("Democrats glorify the killing of the unborn."))
        assert got == {"political"}

    def test_phrase_match(self):
        got = match_groups(AST, LEX, _tweet("Black people are the best at everything."))
        assert got == {"ethnic"}

    def test_no_match(self):
        assert match_groups(AST, LEX, _tweet("hello world")) == set()

    def test_case_insensitive(self):
        text = "DEMOCRATS ARE loud"
        assert match_groups(AST, LEX, _tweet(text)) == match_groups(
            AST, LEX, _tweet(text.lower())
        )

    def test_hashtag_matches(self):
        assert match_groups(AST, LEX, _tweet("#democrats won")) == {"political"}

    def test_phrase_respects_token_boundaries(self):
        assert match_groups(AST, LEX, _tweet("whitewash men everywhere")) == set()
        assert match_groups(AST, LEX, _tweet("the white menace")) == set()

    def test_multi_group_union(self):
        got = match_groups(AST, LEX, _tweet("trans democrats unite"))
        assert got == {"gender", "political"}


class TestPartition:
    def test_single_group_placement(self):
        tweets = [
            _tweet("democrats stuff", i="1"),
            _tweet("trans stuff", i="2"),
            _tweet("black people stuff", i="3"),
        ]
        parts = partition(tweets, AST, LEX)
        assert [t.id for t in parts.political] == ["1"]
        assert [t.id for t in parts.gender] == ["2"]
        assert [t.id for t in parts.ethnic] == ["3"]

    def test_multi_group_dropped(self):
        parts = partition([_tweet("trans democrats")], AST, LEX)
        assert len(parts.multi_group_dropped) == 1
        assert parts.counts["political"] == 0

    def test_no_match_goes_unmatched(self):
        parts = partition([_tweet("nothing here")], AST, LEX)
        assert len(parts.unmatched) == 1

    def test_lang_mismatch_goes_unmatched(self):
        ast = parse_query("(democrats) lang:en")
        parts = partition([_tweet("democrats", lang="de")], ast, LEX)
        assert len(parts.unmatched) == 1

    def test_lang_primary_subtag_matches(self):
        ast = parse_query("(democrats) lang:en")
        parts = partition([_tweet("democrats", lang="en-GB")], ast, LEX)
        assert len(parts.political) == 1

    def test_partition_completeness(self):
        texts = [
            "democrats", "trans", "black people", "trans democrats",
            "nothing", "liberals and trans", "white men things", "",
        ]
        tweets = [_tweet(t or "x", i=str(n)) for n, t in enumerate(texts)]
        parts = partition(tweets, AST, LEX)
        assert parts.total == len(tweets)
        ids = [t.id for bucket in (
            parts.political, parts.gender, parts.ethnic,
            parts.multi_group_dropped, parts.unmatched,
        ) for t in bucket]
        assert sorted(ids) == sorted(t.id for t in tweets)


class TestGroupLexiconFile:
    def test_load(self, tmp_path):
        path = tmp_path / "lex.tsv"
        path.write_text(
            "# comment line\n"
            "democrats\tpolitical\n"
            "White Men\tethnic,gender\n"
            "\n",
            encoding="utf-8",
        )
        lex = load_group_lexicon(path)
        assert lex.groups_for("democrats") == {"political"}
        assert lex.groups_for("white men") == {"ethnic", "gender"}

    def test_bad_group_rejected(self, tmp_path):
        path = tmp_path / "lex.tsv"
        path.write_text("democrats\tpolitics\n", encoding="utf-8")
        with pytest.raises(SchemaError):
            load_group_lexicon(path)

    def test_missing_tab_rejected(self, tmp_path):
        path = tmp_path / "lex.tsv"
        path.write_text("democrats political\n", encoding="utf-8")
        with pytest.raises(SchemaError):
            load_group_lexicon(path)

    def test_missing_terms_reported(self):
        ast = parse_query("(democrats OR unknown)")
        assert LEX.missing_terms(ast) == ["unknown"]
