"""Tokenization, vocabulary construction, and sparse term-frequency vectors."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .errors import DimensionMismatch


@dataclass(frozen=True)
class Token:
    surface: str
    start: int
    end: int


def tokenize(text: str) -> list[Token]:
    """Split text into word and punctuation tokens with character offsets.

    Whitespace separates chunks; inside a chunk, every punctuation
    character becomes its own token except a hyphen joining two
    alphanumerics, which stays inside the word. "5-FU" survives as one
    token, "growth." splits into two, and "5-FU/cisplatin" into three.
    """
    tokens: list[Token] = []
    i = 0
    n = len(text)
    while i < n:
        if text[i].isspace():
            i += 1
            continue
        if _is_word_char(text, i):
            j = i + 1
            while j < n and _is_word_char(text, j):
                j += 1
            tokens.append(Token(text[i:j], i, j))
            i = j
        else:
            tokens.append(Token(text[i], i, i + 1))
            i += 1
    return tokens


def _is_word_char(text: str, i: int) -> bool:
    c = text[i]
    if c.isalnum():
        return True
    if c == "-":
        return (
            i > 0
            and i + 1 < len(text)
            and text[i - 1].isalnum()
            and text[i + 1].isalnum()
        )
    return False


def surfaces(text: str) -> list[str]:
    """Token surfaces only, for callers that do not need offsets."""
    return [t.surface for t in tokenize(text)]


class Vocabulary:
    """Immutable map from case-folded terms to contiguous indices.

    Indices are assigned by descending corpus frequency with
    lexicographic tie-breaking, so a vocabulary is fully determined by
    the documents and min_count it was built from.
    """

    def __init__(self, terms: Sequence[str], min_count: int = 1):
        self._terms = tuple(terms)
        self._index = {t: i for i, t in enumerate(self._terms)}
        if len(self._index) != len(self._terms):
            raise ValueError("vocabulary terms must be unique")
        self.min_count = min_count

    def __len__(self) -> int:
        return len(self._terms)

    def __contains__(self, term: str) -> bool:
        return term.casefold() in self._index

    def __eq__(self, other) -> bool:
        return isinstance(other, Vocabulary) and self._terms == other._terms

    def index(self, term: str) -> int | None:
        return self._index.get(term.casefold())

    def term(self, index: int) -> str:
        return self._terms[index]

    @property
    def terms(self) -> tuple[str, ...]:
        return self._terms

    def to_json(self) -> dict:
        return {"min_count": self.min_count, "terms": list(self._terms)}

    @classmethod
    def from_json(cls, obj: dict) -> "Vocabulary":
        return cls(obj["terms"], min_count=obj["min_count"])

    def save(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_json(), ensure_ascii=False), encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "Vocabulary":
        return cls.from_json(json.loads(Path(path).read_text(encoding="utf-8")))


def build_vocab(documents: Iterable[Sequence[str]], min_count: int = 1) -> Vocabulary:
    """Build a Vocabulary from token lists, keeping case-folded terms whose
    corpus frequency reaches min_count."""
    counts: Counter[str] = Counter()
    for doc in documents:
        counts.update(tok.casefold() for tok in doc)
    kept = [t for t, c in counts.items() if c >= min_count]
    kept.sort(key=lambda t: (-counts[t], t))
    return Vocabulary(kept, min_count=min_count)


@dataclass(frozen=True)
class SparseVector:
    """Sorted (index, value) pairs over a fixed dimension; zeros are absent."""

    dimension: int
    entries: tuple[tuple[int, float], ...] = ()

    def __post_init__(self):
        prev = -1
        for idx, val in self.entries:
            if idx <= prev or idx >= self.dimension:
                raise ValueError("entries must have strictly increasing indices < dimension")
            if val == 0:
                raise ValueError("explicit zeros are not allowed")
            prev = idx

    @classmethod
    def from_counts(cls, counts: dict[int, float], dimension: int) -> "SparseVector":
        entries = tuple(sorted((i, float(v)) for i, v in counts.items() if v != 0))
        return cls(dimension=dimension, entries=entries)

    def items(self) -> tuple[tuple[int, float], ...]:
        return self.entries

    @property
    def indices(self) -> list[int]:
        return [i for i, _ in self.entries]

    @property
    def values(self) -> list[float]:
        return [v for _, v in self.entries]

    def l1_norm(self) -> float:
        return sum(abs(v) for _, v in self.entries)

    def shifted(self, offset: int, dimension: int) -> "SparseVector":
        return SparseVector(dimension, tuple((i + offset, v) for i, v in self.entries))


def bow_vector(tokens: Sequence[str], vocab: Vocabulary) -> SparseVector:
    """Raw term-frequency vector over the vocabulary; OOV tokens are ignored."""
    if len(vocab) == 0:
        raise ValueError("vocabulary is empty")
    counts: dict[int, float] = {}
    for tok in tokens:
        idx = vocab.index(tok)
        if idx is not None:
            counts[idx] = counts.get(idx, 0.0) + 1.0
    return SparseVector.from_counts(counts, len(vocab))


def concat_fields(
    abstract_vec: SparseVector, drug_vec: SparseVector, cancer_vec: SparseVector
) -> SparseVector:
    """Stack the three field vectors into one of dimension 3|V|, with drug
    indices offset by |V| and cancer indices by 2|V|."""
    dim = abstract_vec.dimension
    if drug_vec.dimension != dim or cancer_vec.dimension != dim:
        raise DimensionMismatch(
            f"field dimensions differ: {dim}, {drug_vec.dimension}, {cancer_vec.dimension}"
        )
    entries = (
        abstract_vec.entries
        + tuple((i + dim, v) for i, v in drug_vec.entries)
        + tuple((i + 2 * dim, v) for i, v in cancer_vec.entries)
    )
    return SparseVector(3 * dim, entries)
