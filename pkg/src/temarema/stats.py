"""Corpus survey measurements over annotated documents.

``ratio`` counts sentences whose theme is a preceding subject: status ok,
markedness unmarked, and the recorded theme rule name starting with
``theme_sbj``.  ``compare`` performs a sentence-level presence comparison
of themes between two aligned corpora; token alignment is deliberately
not required, since different analyzers tokenize differently.
"""

from __future__ import annotations

from dataclasses import dataclass

from .annotate import SUBJECT_RULE_PREFIX, read_annotation
from .conllu import Document
from .errors import AlignmentError, StatsError


@dataclass(frozen=True)
class RatioReport:
    per_doc: dict[str, tuple[int, int, float]]  # doc_id -> (count, total, ratio)
    mean_ratio: float
    grand_ratio: float

    def to_json_dict(self) -> dict:
        return {
            "per_doc": {
                doc: {"preceding_subject_themes": c, "sentences": t, "ratio": r}
                for doc, (c, t, r) in self.per_doc.items()
            },
            "mean_ratio": self.mean_ratio,
            "grand_ratio": self.grand_ratio,
        }

    def to_text(self) -> str:
        lines = [f"{'document':<24}{'subj-themes':>12}{'sentences':>12}{'ratio':>10}"]
        for doc, (count, total, ratio) in self.per_doc.items():
            lines.append(f"{doc:<24}{count:>12}{total:>12}{ratio:>10.3f}")
        lines.append(f"mean ratio:  {self.mean_ratio:.3f}")
        lines.append(f"pooled ratio: {self.grand_ratio:.3f}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ComparisonReport:
    agree: int
    overmatch: int
    undermatch: int
    both_absent: int
    total: int

    @property
    def overmatch_ratio(self) -> float:
        return self.overmatch / self.total if self.total else 0.0

    @property
    def undermatch_ratio(self) -> float:
        return self.undermatch / self.total if self.total else 0.0

    def to_json_dict(self) -> dict:
        return {
            "agree": self.agree,
            "overmatch": self.overmatch,
            "undermatch": self.undermatch,
            "both_absent": self.both_absent,
            "total": self.total,
            "overmatch_ratio": self.overmatch_ratio,
            "undermatch_ratio": self.undermatch_ratio,
        }

    def to_text(self) -> str:
        return (
            f"sentences compared: {self.total}\n"
            f"themes in both:     {self.agree}\n"
            f"overmatches:        {self.overmatch} ({self.overmatch_ratio:.1%})\n"
            f"undermatches:       {self.undermatch} ({self.undermatch_ratio:.1%})\n"
            f"themes in neither:  {self.both_absent}\n"
        )


def _require_annotated(doc: Document) -> None:
    if not any(read_annotation(s) is not None for s in doc.sentences):
        raise StatsError(
            f"document {doc.doc_id!r} carries no theme/rheme annotations; "
            "run 'temarema annotate' first"
        )


def _is_preceding_subject_theme(ann) -> bool:
    return (
        ann is not None
        and ann.status == "ok"
        and ann.markedness == "unmarked"
        and bool(ann.rule)
        and ann.rule.startswith(SUBJECT_RULE_PREFIX)
    )


def ratio(docs: list[Document]) -> RatioReport:
    if not docs or not any(d.sentences for d in docs):
        raise StatsError("no sentences to measure")
    per_doc: dict[str, tuple[int, int, float]] = {}
    for doc in docs:
        _require_annotated(doc)
        if doc.doc_id in per_doc:
            raise StatsError(f"duplicate document id {doc.doc_id!r} in corpus")
        count = sum(
            1 for s in doc.sentences if _is_preceding_subject_theme(read_annotation(s))
        )
        total = len(doc.sentences)
        per_doc[doc.doc_id] = (count, total, count / total)
    ratios = [r for _, _, r in per_doc.values()]
    grand_count = sum(c for c, _, _ in per_doc.values())
    grand_total = sum(t for _, t, _ in per_doc.values())
    return RatioReport(
        per_doc=per_doc,
        mean_ratio=sum(ratios) / len(ratios),
        grand_ratio=grand_count / grand_total,
    )


def compare(reference: list[Document], auto: list[Document]) -> ComparisonReport:
    """Sentence-level theme presence comparison between aligned corpora."""
    if len(reference) != len(auto):
        raise AlignmentError(
            f"corpora differ in document count: {len(reference)} vs {len(auto)}"
        )
    agree = overmatch = undermatch = both_absent = total = 0
    for ref_doc, auto_doc in zip(reference, auto):
        if ref_doc.doc_id != auto_doc.doc_id:
            raise AlignmentError(
                f"document order diverges: {ref_doc.doc_id!r} vs {auto_doc.doc_id!r}"
            )
        _require_annotated(ref_doc)
        _require_annotated(auto_doc)
        if len(ref_doc.sentences) != len(auto_doc.sentences):
            raise AlignmentError(
                f"document {ref_doc.doc_id!r}: sentence counts differ "
                f"({len(ref_doc.sentences)} vs {len(auto_doc.sentences)})"
            )
        for ref_sent, auto_sent in zip(ref_doc.sentences, auto_doc.sentences):
            if ref_sent.sent_id != auto_sent.sent_id:
                raise AlignmentError(
                    f"document {ref_doc.doc_id!r}: first divergent sentence id "
                    f"{ref_sent.sent_id!r} vs {auto_sent.sent_id!r}"
                )
            ref_ann = read_annotation(ref_sent)
            auto_ann = read_annotation(auto_sent)
            ref_has = ref_ann is not None and ref_ann.status == "ok"
            auto_has = auto_ann is not None and auto_ann.status == "ok"
            total += 1
            if ref_has and auto_has:
                agree += 1
            elif auto_has:
                overmatch += 1
            elif ref_has:
                undermatch += 1
            else:
                both_absent += 1
    if total == 0:
        raise StatsError("no sentences to compare")
    return ComparisonReport(agree, overmatch, undermatch, both_absent, total)
