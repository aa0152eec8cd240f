"""Extract annotated theme/rheme phrases and write their vector file.

Input contract (produced by the analysis toolkit's annotator): CoNLL-U
sentences carrying ``# tp_status``, ``# tp_theme`` and ``# tp_rheme``
comments with inclusive id ranges such as ``1-2,4-4``.  Phrase text is
the span's surface forms joined by single spaces.

Output contract, byte-exact::

    dim <d>
    <doc_id>/<sent_id>/<T|R>\t<f1> <f2> ... <fd>

One row per (sentence, slot) with status ok, document order, theme row
before rheme row.  The file is written to a temporary sibling and moved
into place, so a failing run never leaves a truncated file behind.
"""

from __future__ import annotations

import os
import re
import tempfile
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .encoders import ExportError, load_encoder

_COMMENT_RE = re.compile(r"#\s*([\w.]+(?:\s+id)?)\s*=\s*(.*\S)\s*$")


@dataclass(frozen=True)
class ExportJob:
    input_path: Path
    model_id: str
    output_path: Path
    normalize: bool = False


@dataclass(frozen=True)
class PhraseRow:
    key: str
    text: str


def _parse_ranges(spec: str) -> list[int]:
    ids: set[int] = set()
    for part in spec.split(","):
        lo, _, hi = part.partition("-")
        ids.update(range(int(lo), int(hi) + 1))
    return sorted(ids)


def read_phrases(text: str, fallback_doc_id: str) -> list[PhraseRow]:
    """Pull the ok-status theme/rheme phrases out of annotated CoNLL-U."""
    doc_id = fallback_doc_id
    rows: list[PhraseRow] = []
    saw_annotation = False
    position = 0
    for block in text.split("\n\n"):
        if not block.strip():
            continue
        position += 1
        meta: dict[str, str] = {}
        forms: dict[int, str] = {}
        for line in block.split("\n"):
            if line.startswith("#"):
                match = _COMMENT_RE.match(line)
                if match:
                    meta[match.group(1)] = match.group(2)
                continue
            cols = line.split("\t")
            if len(cols) != 10 or not cols[0].isdigit():
                continue
            forms[int(cols[0])] = cols[1]
        if position == 1 and "newdoc id" in meta:
            doc_id = meta["newdoc id"]
        if "tp_status" in meta:
            saw_annotation = True
        if meta.get("tp_status") != "ok":
            continue
        sent_id = meta.get("sent_id", str(position))
        for slot, key_name in (("T", "tp_theme"), ("R", "tp_rheme")):
            span = _parse_ranges(meta[key_name])
            phrase = " ".join(forms[i] for i in span)
            rows.append(PhraseRow(f"{doc_id}/{sent_id}/{slot}", phrase))
    if not saw_annotation:
        raise ExportError(
            "input carries no tp_* annotation comments; run the annotator first"
        )
    return rows


def render_vector_file(rows, vectors: np.ndarray) -> str:
    dim = vectors.shape[1] if len(rows) else 0
    lines = [f"dim {dim}"]
    for row, vector in zip(rows, vectors):
        values = " ".join(repr(float(v)) for v in vector)
        lines.append(f"{row.key}\t{values}")
    return "\n".join(lines) + "\n"


def export_vectors(job: ExportJob, encoder=None) -> int:
    """Run the export; returns the number of rows written."""
    text = job.input_path.read_text(encoding="utf-8")
    rows = read_phrases(text, job.input_path.stem)
    if encoder is None:
        encoder = load_encoder(job.model_id)
    vectors = encoder.encode([row.text for row in rows])
    vectors = np.atleast_2d(np.asarray(vectors, dtype=np.float64))
    if len(rows) and vectors.shape[0] != len(rows):
        raise ExportError(
            f"encoder returned {vectors.shape[0]} vectors for {len(rows)} phrases"
        )
    if job.normalize and len(rows):
        norms = np.linalg.norm(vectors, axis=1, keepdims=True)
        if np.any(norms == 0.0):
            raise ExportError("cannot normalize a zero embedding vector")
        vectors = vectors / norms
    if len(rows) == 0:
        payload = f"dim {getattr(encoder, 'dim', 0)}\n"
    else:
        payload = render_vector_file(rows, vectors)
    _atomic_write(job.output_path, payload)
    return len(rows)


def _atomic_write(path: Path, payload: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    descriptor, temp_name = tempfile.mkstemp(
        prefix=path.name + ".", suffix=".tmp", dir=path.parent
    )
    try:
        with os.fdopen(descriptor, "w", encoding="utf-8") as handle:
            handle.write(payload)
        os.replace(temp_name, path)
    except BaseException:
        try:
            os.unlink(temp_name)
        except FileNotFoundError:
            pass
        raise
