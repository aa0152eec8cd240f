"""Sentence encoders behind one tiny interface: encode(texts) -> ndarray.

Two families are supported:

- ``hash:<dim>``: a deterministic offline encoder that derives each
  vector from a SHA-256 digest of the text.  Identical texts map to
  identical vectors, so it is useful for air-gapped runs and tests.
- anything else is treated as a sentence-transformers model identifier
  (the default is a multilingual model suitable for Spanish).
"""

from __future__ import annotations

import hashlib

import numpy as np

DEFAULT_MODEL = "paraphrase-multilingual-MiniLM-L12-v2"


class ExportError(Exception):
    pass


class HashEncoder:
    """Deterministic stand-in encoder; one seeded Gaussian draw per text."""

    def __init__(self, dim: int):
        if dim <= 0:
            raise ExportError(f"hash encoder dimension must be positive, got {dim}")
        self.dim = dim

    def encode(self, texts):
        rows = []
        for text in texts:
            digest = hashlib.sha256(text.encode("utf-8")).digest()
            rng = np.random.default_rng(int.from_bytes(digest[:8], "big"))
            rows.append(rng.standard_normal(self.dim))
        return np.asarray(rows, dtype=np.float64)


class TransformerEncoder:
    def __init__(self, model_id: str):
        try:
            from sentence_transformers import SentenceTransformer
        except ImportError as exc:  # pragma: no cover - environment specific
            raise ExportError(f"sentence-transformers is not installed: {exc}")
        try:
            self._model = SentenceTransformer(model_id)
        except Exception as exc:
            raise ExportError(f"could not load model {model_id!r}: {exc}")
        self.dim = int(self._model.get_sentence_embedding_dimension())

    def encode(self, texts):
        vectors = self._model.encode(list(texts), convert_to_numpy=True)
        return np.asarray(vectors, dtype=np.float64)


def load_encoder(model_id: str):
    if model_id.startswith("hash:"):
        spec = model_id[5:]
        try:
            dim = int(spec)
        except ValueError:
            raise ExportError(f"bad hash encoder spec {model_id!r}; use hash:<dim>")
        return HashEncoder(dim)
    return TransformerEncoder(model_id)
