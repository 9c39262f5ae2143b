"""Text normalization for the rule engine.

Produces clauses of annotated tokens: lowercased words with their source
character spans, URL/EMOJI/BLANK class tokens, and the punctuation marks
the elliptical rules care about (colon, equals, comma, quote). Common
tweet abbreviations are expanded through a shipped, editable table, so
"White ppl be like __" normalizes to [white, people, be, like, BLANK].
Clause breaks happen at sentence punctuation, newlines, and dashes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

# token kinds
WORD = "word"
EMOJI = "EMOJI"
URL = "URL"
BLANK = "BLANK"
COLON = ":"
EQUALS = "="
COMMA = ","
QUOTE = '"'

_URL_RE = re.compile(r"https?://\S+|www\.\S+", re.IGNORECASE)
_EMOJI_RE = re.compile(
    "["
    "\U0001F000-\U0001FAFF"
    "☀-➿"
    "⬀-⯿"
    "■-◿"
    "\U0001F1E6-\U0001F1FF"
    "]"
)
_WORD_RE = re.compile(r"[^\W_]+(?:['’][^\W_]+)*", re.UNICODE)
_BLANK_RE = re.compile(r"_{2,}")

_CLAUSE_BREAK = {".", "!", "?", ";", "\n"}
_QUOTE_CHARS = {'"', "“", "”"}


@dataclass(frozen=True)
class Token:
    norm: str  # normalized lowercase form (or a class token)
    kind: str
    start: int  # character span in the original text
    end: int


@dataclass
class NormalizedText:
    clauses: list[list[Token]]

    @property
    def tokens(self) -> list[Token]:
        return [t for clause in self.clauses for t in clause]

    @property
    def token_texts(self) -> list[str]:
        return [t.norm for t in self.tokens]


def load_abbreviations(path) -> dict[str, str]:
    """``token<TAB>expansion`` per line; ``#`` comments. Expansions may
    contain spaces and become several tokens."""
    table: dict[str, str] = {}
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        token, _, expansion = line.partition("\t")
        if token and expansion:
            table[token.strip().lower()] = expansion.strip().lower()
    return table


def normalize(text: str, abbreviations: dict[str, str] | None = None) -> NormalizedText:
    """Tokenize into clauses; abbreviation expansion keeps source spans."""
    abbreviations = abbreviations or {}
    clauses: list[list[Token]] = []
    current: list[Token] = []

    def break_clause():
        nonlocal current
        if current:
            clauses.append(current)
            current = []

    pos = 0
    n = len(text or "")
    while pos < n:
        ch = text[pos]

        url = _URL_RE.match(text, pos)
        if url:
            current.append(Token(URL, URL, pos, url.end()))
            pos = url.end()
            continue
        if _EMOJI_RE.match(text, pos):
            current.append(Token(EMOJI, EMOJI, pos, pos + 1))
            pos += 1
            continue
        blank = _BLANK_RE.match(text, pos)
        if blank:
            current.append(Token(BLANK, BLANK, pos, blank.end()))
            pos = blank.end()
            continue
        word = _WORD_RE.match(text, pos)
        if word:
            surface = word.group(0).lower().replace("’", "'")
            expansion = abbreviations.get(surface, surface)
            for part in expansion.split():
                current.append(Token(part, WORD, pos, word.end()))
            pos = word.end()
            continue

        if ch in _CLAUSE_BREAK:
            # mark question clauses so the interrogative logic can see them
            if ch == "?" and current:
                current.append(Token("?", "?", pos, pos + 1))
            break_clause()
            pos += 1
            continue
        if ch == "-" or ch == "—" or ch == "–":
            # a dash run between spaces (or an em dash anywhere) splits clauses
            em = ch != "-"
            run_end = pos
            while run_end < n and text[run_end] in "-—–":
                run_end += 1
            before_space = pos == 0 or text[pos - 1].isspace()
            after_space = run_end >= n or text[run_end].isspace()
            if em or (before_space and after_space):
                break_clause()
            pos = run_end
            continue
        if ch == ":":
            current.append(Token(COLON, COLON, pos, pos + 1))
            pos += 1
            continue
        if ch == "=":
            current.append(Token(EQUALS, EQUALS, pos, pos + 1))
            pos += 1
            continue
        if ch == ",":
            current.append(Token(COMMA, COMMA, pos, pos + 1))
            pos += 1
            continue
        if ch in _QUOTE_CHARS or ch == "'":
            # standalone apostrophes act as quotes; intra-word ones were
            # already absorbed by the word pattern
            current.append(Token(QUOTE, QUOTE, pos, pos + 1))
            pos += 1
            continue
        pos += 1

    break_clause()
    return NormalizedText(clauses=clauses)
