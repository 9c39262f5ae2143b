import pytest

from genscope.corpus import Directive, parse_query
from genscope.errors import QuerySyntaxError


class TestParse:
    def test_keywords_phrase_directive_lang(self):
        ast = parse_query("(trans OR cis OR (white men)) -is:retweet lang:en")
        assert ast.disjuncts == (("trans",), ("cis",), ("white", "men"))
        assert ast.operators == (Directive("is:retweet", negated=True),)
        assert ast.lang == "en"

    def test_minimal_query(self):
        ast = parse_query("(democrats)")
        assert ast.disjuncts == (("democrats",),)
        assert ast.operators == ()
        assert ast.lang is None

    def test_full_directive_tail(self):
        ast = parse_query(
            "(a OR b) -has:links -has:mentions -is:retweet -is:reply -is:nullcast lang:en"
        )
        assert len(ast.operators) == 5
        assert all(op.negated for op in ast.operators)

    def test_positive_directive(self):
        ast = parse_query("(a OR b) is:reply")
        assert ast.operators == (Directive("is:reply", negated=False),)

    def test_terms_lowercased(self):
        ast = parse_query("(Trans OR (White MEN))")
        assert ast.disjuncts == (("trans",), ("white", "men"))

    def test_duplicate_terms_collapse(self):
        ast = parse_query("(a OR b OR a)")
        assert ast.disjuncts == (("a",), ("b",))


class TestErrors:
    def test_unbalanced_paren_offset(self):
        with pytest.raises(QuerySyntaxError) as exc:
            parse_query("(a OR (b c")
        assert exc.value.offset == 6

    def test_unbalanced_outer_paren(self):
        with pytest.raises(QuerySyntaxError) as exc:
            parse_query("(a OR b")
        assert exc.value.offset == 0

    def test_empty_disjunct(self):
        with pytest.raises(QuerySyntaxError, match="empty disjunct"):
            parse_query("(a OR )")
        with pytest.raises(QuerySyntaxError, match="empty disjunct"):
            parse_query("()")

    def test_unknown_directive(self):
        with pytest.raises(QuerySyntaxError, match="unknown directive"):
            parse_query("(a) -is:quote")

    def test_missing_or_between_terms(self):
        with pytest.raises(QuerySyntaxError, match="expected OR"):
            parse_query("(a b)")

    def test_single_token_phrase(self):
        with pytest.raises(QuerySyntaxError, match="at least 2"):
            parse_query("((white))")

    def test_must_start_with_paren(self):
        with pytest.raises(QuerySyntaxError):
            parse_query("democrats")


class TestRoundTrip:
    @pytest.mark.parametrize(
        "query",
        [
            "(trans OR cis OR (white men)) -is:retweet lang:en",
            "(democrats)",
            "(a OR (b c) OR d) -has:links is:reply lang:en-us",
        ],
    )
    def test_render_parse_fixed_point(self, query):
        once = parse_query(query)
        twice = parse_query(once.render())
        assert once == twice
        assert once.render() == twice.render()
