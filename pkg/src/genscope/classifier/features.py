"""Tokenization and feature extraction: bag of words and mean-pooled embeddings."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

from ..base import ParamsMixin, check_fitted
from ..errors import InputError, SchemaError

URL_TOKEN = "URL"
EMOJI_TOKEN = "EMOJI"

_URL_RE = re.compile(r"https?://\S+|www\.\S+", re.IGNORECASE)

# pictographs, emoticons, transport, supplemental symbols, dingbats,
# misc symbols, geometric shapes (media-player glyphs appear in tweets)
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


def tokenize(text: str) -> list[str]:
    """Lowercased word tokens with URLs and emoji mapped to class tokens."""
    tokens: list[str] = []
    pos = 0
    text = text or ""
    while pos < len(text):
        url = _URL_RE.match(text, pos)
        if url:
            tokens.append(URL_TOKEN)
            pos = url.end()
            continue
        if _EMOJI_RE.match(text, pos):
            tokens.append(EMOJI_TOKEN)
            pos += 1
            continue
        word = _WORD_RE.match(text, pos)
        if word:
            tokens.append(word.group(0).lower().replace("’", "'"))
            pos = word.end()
            continue
        pos += 1
    return tokens


@dataclass(frozen=True)
class Vocabulary:
    """Token-to-index map with contiguous indices 0..size-1."""

    index: dict[str, int]
    min_count: int

    @property
    def size(self) -> int:
        return len(self.index)

    def __contains__(self, token: str) -> bool:
        return token in self.index

    def tokens_by_index(self) -> list[str]:
        out = [""] * self.size
        for token, i in self.index.items():
            out[i] = token
        return out


def build_vocab(token_lists, min_count: int = 1) -> Vocabulary:
    """Vocabulary of tokens seen at least min_count times.

    Indices are assigned by descending frequency, ties broken
    lexicographically, so the mapping is deterministic.
    """
    if min_count < 1:
        raise InputError("min_count must be >= 1")
    counts: dict[str, int] = {}
    for tokens in token_lists:
        for token in tokens:
            counts[token] = counts.get(token, 0) + 1
    kept = [(-c, t) for t, c in counts.items() if c >= min_count]
    if not kept:
        raise InputError(
            f"empty vocabulary: no token reached min_count={min_count}"
        )
    kept.sort()
    return Vocabulary(
        index={t: i for i, (_, t) in enumerate(kept)}, min_count=min_count
    )


@dataclass(frozen=True)
class SparseVector:
    """Sorted (index, count) pairs over a fixed dimension."""

    pairs: tuple[tuple[int, int], ...]
    dimension: int

    def __post_init__(self):
        last = -1
        for idx, count in self.pairs:
            if idx <= last:
                raise InputError("indices must be strictly increasing")
            if count <= 0:
                raise InputError("counts must be > 0")
            if idx >= self.dimension:
                raise InputError("index out of range for dimension")
            last = idx

    def to_dense(self) -> np.ndarray:
        dense = np.zeros(self.dimension)
        for idx, count in self.pairs:
            dense[idx] = count
        return dense


def vectorize_bow(tokens, vocab: Vocabulary) -> SparseVector:
    """Count in-vocabulary tokens; out-of-vocabulary tokens are dropped."""
    counts: dict[int, int] = {}
    for token in tokens:
        idx = vocab.index.get(token)
        if idx is not None:
            counts[idx] = counts.get(idx, 0) + 1
    return SparseVector(
        pairs=tuple(sorted(counts.items())), dimension=vocab.size
    )


def stack_features(vectors) -> np.ndarray:
    """Dense (n, d) matrix from SparseVectors or array-likes."""
    rows = []
    for v in vectors:
        rows.append(v.to_dense() if isinstance(v, SparseVector) else np.asarray(v, dtype=float))
    if not rows:
        raise InputError("no feature vectors given")
    dims = {r.shape[-1] for r in rows}
    if len(dims) > 1:
        raise InputError(f"inconsistent feature dimensions: {sorted(dims)}")
    return np.vstack(rows)


@dataclass
class EmbeddingTable:
    """Fixed-dimension word vectors with a drop-to-zero OOV policy."""

    vectors: dict[str, np.ndarray]
    dimension: int
    oov_policy: str = "zero_vector"

    def __post_init__(self):
        if self.dimension <= 0:
            raise InputError("embedding dimension must be > 0")
        for token, vec in self.vectors.items():
            if vec.shape != (self.dimension,):
                raise SchemaError(
                    f"vector for {token!r} has length {vec.shape[0]}, "
                    f"expected {self.dimension}"
                )


def load_embeddings(path) -> EmbeddingTable:
    """Read a text embedding table: header ``d <dim>``, then one
    ``token v1 .. vd`` line per word."""
    vectors: dict[str, np.ndarray] = {}
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().split()
        if len(header) != 2 or header[0] != "d":
            raise SchemaError("embedding file must start with 'd <dim>'")
        try:
            dim = int(header[1])
        except ValueError:
            raise SchemaError(f"bad embedding dimension {header[1]!r}") from None
        for lineno, line in enumerate(fh, start=2):
            parts = line.split()
            if not parts:
                continue
            if len(parts) != dim + 1:
                raise SchemaError(
                    f"line {lineno}: expected {dim} values, got {len(parts) - 1}"
                )
            vectors[parts[0]] = np.array([float(v) for v in parts[1:]])
    return EmbeddingTable(vectors=vectors, dimension=dim)


def embed_mean(tokens, table: EmbeddingTable) -> tuple[np.ndarray, bool]:
    """Mean of in-table token vectors.

    Returns (vector, all_oov); an all-OOV input yields the zero vector
    with the flag set.
    """
    hits = [table.vectors[t] for t in tokens if t in table.vectors]
    if not hits:
        return np.zeros(table.dimension), True
    return np.mean(hits, axis=0), False


class BagOfWordsVectorizer(ParamsMixin):
    """fit/transform wrapper over tokenize + build_vocab + vectorize_bow."""

    def __init__(self, min_count: int = 2):
        self.min_count = min_count

    def fit(self, texts):
        self.vocabulary_ = build_vocab(
            (tokenize(t) for t in texts), min_count=self.min_count
        )
        return self

    def transform(self, texts) -> np.ndarray:
        check_fitted(self, "vocabulary_")
        return stack_features(
            vectorize_bow(tokenize(t), self.vocabulary_) for t in texts
        )

    def fit_transform(self, texts) -> np.ndarray:
        return self.fit(texts).transform(texts)


class MeanEmbeddingVectorizer(ParamsMixin):
    """Transform texts to mean-pooled word vectors from a loaded table."""

    def __init__(self, table: EmbeddingTable | None = None):
        self.table = table

    def fit(self, texts=None):
        if self.table is None:
            raise InputError("MeanEmbeddingVectorizer needs a loaded table")
        return self

    def transform(self, texts) -> np.ndarray:
        if self.table is None:
            raise InputError("MeanEmbeddingVectorizer needs a loaded table")
        return np.vstack([embed_mean(tokenize(t), self.table)[0] for t in texts])
