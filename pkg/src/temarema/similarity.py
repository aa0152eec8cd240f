"""Phrase similarity providers for linking theme/rheme spans.

Two interchangeable scorers: a lexical baseline (Jaccard index over
content lemmas) and a precomputed-embedding backend (cosine over vectors
keyed by phrase).  The embedding backend falls back to the lexical score
for phrases missing from the vector store and counts how often it did.

Vector file format (UTF-8)::

    dim <d>
    <doc_id>/<sent_id>/<T|R>\t<f1> <f2> ... <fd>
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field

import numpy as np

from .errors import VectorFormatError

CONTENT_POS = frozenset({"NOUN", "PROPN", "VERB", "ADJ", "NUM"})


@dataclass(frozen=True)
class PhraseKey:
    doc_id: str
    sent_id: str
    slot: str  # "T" | "R"

    def as_string(self) -> str:
        return f"{self.doc_id}/{self.sent_id}/{self.slot}"


def parse_key(text: str) -> PhraseKey:
    head, sep, slot = text.rpartition("/")
    doc_id, sep2, sent_id = head.rpartition("/")
    if not sep or not sep2 or slot not in ("T", "R"):
        raise VectorFormatError(f"unparseable phrase key {text!r}")
    return PhraseKey(doc_id, sent_id, slot)


@dataclass(frozen=True)
class Phrase:
    """A keyed theme or rheme span: (lemma, upos) pairs in surface order."""

    key: PhraseKey
    items: tuple[tuple[str, str], ...]
    text: str = ""


def _content_lemmas(items) -> frozenset[str]:
    return frozenset(
        unicodedata.normalize("NFC", lemma).casefold()
        for lemma, upos in items
        if upos in CONTENT_POS
    )


def lexical_similarity(a, b) -> float:
    """Jaccard index of the content-lemma sets; 0 when both are empty."""
    sa, sb = _content_lemmas(a), _content_lemmas(b)
    if not sa and not sb:
        return 0.0
    union = len(sa | sb)
    return len(sa & sb) / union


def cosine(u, v) -> float:
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if u.shape != v.shape:
        raise VectorFormatError(f"dimension mismatch: {u.shape} vs {v.shape}")
    nu = np.linalg.norm(u)
    nv = np.linalg.norm(v)
    if nu == 0.0 or nv == 0.0:
        raise VectorFormatError("cosine of a zero vector is undefined")
    return float(np.clip(np.dot(u, v) / (nu * nv), -1.0, 1.0))


@dataclass(frozen=True)
class VectorStore:
    dim: int
    vectors: dict[str, np.ndarray]

    def __contains__(self, key: str) -> bool:
        return key in self.vectors


def load_vectors(data) -> VectorStore:
    """Parse a vector file; every malformed row is reported with its line."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    lines = data.split("\n")
    if not lines or not lines[0].startswith("dim "):
        raise VectorFormatError("line 1: expected header 'dim <d>'")
    try:
        dim = int(lines[0][4:])
    except ValueError:
        raise VectorFormatError(f"line 1: bad dimension {lines[0][4:]!r}")
    if dim <= 0:
        raise VectorFormatError("line 1: dimension must be positive")
    vectors: dict[str, np.ndarray] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        if not line:
            continue
        key_text, sep, values = line.partition("\t")
        if not sep:
            raise VectorFormatError(f"line {lineno}: missing tab separator")
        try:
            key = parse_key(key_text)
        except VectorFormatError as exc:
            raise VectorFormatError(f"line {lineno}: {exc}")
        parts = values.split()
        if len(parts) != dim:
            raise VectorFormatError(
                f"line {lineno}: expected {dim} components, got {len(parts)}"
            )
        try:
            vec = np.array([float(p) for p in parts], dtype=float)
        except ValueError:
            raise VectorFormatError(f"line {lineno}: non-numeric component")
        if not np.all(np.isfinite(vec)):
            raise VectorFormatError(f"line {lineno}: non-finite component")
        key_str = key.as_string()
        if key_str in vectors:
            raise VectorFormatError(f"line {lineno}: duplicate key {key_str!r}")
        vectors[key_str] = vec
    return VectorStore(dim, vectors)


class LexicalProvider:
    """Scores phrase pairs by content-lemma overlap."""

    name = "lexical"

    def score(self, a: Phrase, b: Phrase) -> float:
        return lexical_similarity(a.items, b.items)


@dataclass
class EmbeddingProvider:
    """Scores phrase pairs by cosine over stored vectors.

    Pairs with a missing vector fall back to the lexical score;
    ``fallbacks`` counts these for diagnostics.
    """

    store: VectorStore
    fallbacks: int = 0
    name: str = field(default="embedding", init=False)
    _lexical: LexicalProvider = field(default_factory=LexicalProvider, init=False)

    def score(self, a: Phrase, b: Phrase) -> float:
        ka, kb = a.key.as_string(), b.key.as_string()
        if ka in self.store and kb in self.store:
            return cosine(self.store.vectors[ka], self.store.vectors[kb])
        self.fallbacks += 1
        return self._lexical.score(a, b)


def linked(a: Phrase, b: Phrase, provider, tau: float) -> bool:
    """True when the provider scores the pair at or above the threshold."""
    return provider.score(a, b) >= tau
