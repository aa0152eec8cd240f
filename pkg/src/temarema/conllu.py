"""CoNLL-U reading, writing, and the theme/rheme annotation extension.

The parser keeps every byte it needs to reproduce the input exactly:
comments are stored verbatim, multiword-range and decimal-id rows are kept
as opaque lines attached to the next syntactic token, and column contents
are never rewritten.  ``serialize_document(parse_document(text)) == text``
holds for any well-formed file (one blank line between sentences, one at
the end).

Theme/rheme results are written both as sentence-level comments and as
token-level MISC entries::

    # tp_status = ok | no_theme | rejected
    # tp_theme = <id>-<id>[,<id>-<id>...]      (inclusive ranges)
    # tp_rheme = <id>-<id>[,<id>-<id>...]
    # tp_markedness = unmarked | marked | thematized
    # tp_modality = factual | reported | attitude
    # tp_rule = <name of the grammar rule that selected the theme>

    MISC:  TP=Theme | TP=Rheme | TP=Out

Only ``TP=...`` MISC entries and ``# tp_*`` comments are owned by this
package; everything else is passed through untouched.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, field, replace

from .errors import AnnotationError, ConlluParseError, ConlluStructureError

_TP_COMMENT_RE = re.compile(r"#\s*tp_(\w+)\s*=\s*(.*\S)\s*$")
_SENT_ID_RE = re.compile(r"#\s*sent_id\s*=\s*(.*\S)\s*$")
_NEWDOC_RE = re.compile(r"#\s*newdoc\s+id\s*=\s*(.*\S)\s*$")


@dataclass(frozen=True)
class Token:
    """One syntactic-word row of a CoNLL-U sentence.

    ``pre_lines`` holds multiword-range rows (``3-4 del ...``) and other
    opaque rows that appeared immediately before this token in the input;
    they are re-emitted verbatim and take no part in tree building.
    """

    id: int
    form: str
    lemma: str
    upos: str
    xpos: str
    feats: str
    head: int
    deprel: str
    deps: str
    misc: tuple[str, ...]
    pre_lines: tuple[str, ...] = ()

    def feats_dict(self) -> dict[str, str]:
        if self.feats == "_" or not self.feats:
            return {}
        out = {}
        for item in self.feats.split("|"):
            key, _, value = item.partition("=")
            out[key] = value
        return out

    def misc_value(self, key: str) -> str | None:
        prefix = key + "="
        for entry in self.misc:
            if entry.startswith(prefix):
                return entry[len(prefix):]
        return None

    def row(self) -> str:
        misc_col = "|".join(self.misc) if self.misc else "_"
        return "\t".join(
            (
                str(self.id),
                self.form,
                self.lemma,
                self.upos,
                self.xpos,
                self.feats,
                str(self.head),
                self.deprel,
                self.deps,
                misc_col,
            )
        )


@dataclass
class Sentence:
    """One sentence block: comments, tokens, and any trailing opaque rows."""

    sent_id: str
    comments: list[str]
    tokens: list[Token]
    trailing_lines: list[str] = field(default_factory=list)

    def token_ids(self) -> set[int]:
        return {t.id for t in self.tokens}

    def token(self, token_id: int) -> Token:
        for t in self.tokens:
            if t.id == token_id:
                return t
        raise KeyError(token_id)

    def tp_meta(self) -> dict[str, str]:
        """Parsed ``# tp_*`` comment block, empty if the sentence is unannotated."""
        meta = {}
        for line in self.comments:
            m = _TP_COMMENT_RE.match(line)
            if m:
                meta[m.group(1)] = m.group(2)
        return meta

    def text(self, token_ids=None) -> str:
        """Surface forms joined by single spaces, optionally restricted to a span."""
        toks = self.tokens if token_ids is None else [t for t in self.tokens if t.id in token_ids]
        return " ".join(t.form for t in toks)


@dataclass
class Document:
    doc_id: str
    sentences: list[Sentence]

    def sentence(self, sent_id: str) -> Sentence:
        for s in self.sentences:
            if s.sent_id == sent_id:
                return s
        raise KeyError(sent_id)


def parse_document(text: str, doc_id: str | None = None) -> Document:
    """Parse a CoNLL-U document.

    The text is NFC-normalised before parsing so lemma comparisons behave
    consistently downstream.  A ``# newdoc id`` comment on the first
    sentence names the document; it wins over the ``doc_id`` argument,
    which is only the fallback (default ``"doc"``), so phrase keys agree
    across tools regardless of file naming.
    """
    text = unicodedata.normalize("NFC", text)
    sentences: list[Sentence] = []
    comments: list[str] = []
    tokens: list[Token] = []
    pending: list[str] = []
    trailing: list[str] = []
    start_line = 1

    def finish(end_line: int) -> None:
        nonlocal comments, tokens, pending, trailing
        if not comments and not tokens and not pending:
            return
        if not tokens:
            raise ConlluParseError(
                f"line {start_line}: sentence block without token rows"
            )
        # Opaque rows after the last integer row stay with this sentence.
        trailing = pending
        sent_id = None
        for line in comments:
            m = _SENT_ID_RE.match(line)
            if m:
                sent_id = m.group(1)
                break
        if sent_id is None:
            sent_id = str(len(sentences) + 1)
        sent = Sentence(sent_id, comments, tokens, trailing)
        _check_sentence(sent)
        sentences.append(sent)
        comments, tokens, pending, trailing = [], [], [], []

    lines = text.split("\n")
    for lineno, line in enumerate(lines, start=1):
        if line == "":
            finish(lineno)
            start_line = lineno + 1
            continue
        if line.startswith("#"):
            if tokens:
                raise ConlluParseError(f"line {lineno}: comment after token rows")
            comments.append(line)
            continue
        cols = line.split("\t")
        if len(cols) != 10:
            raise ConlluParseError(
                f"line {lineno}: expected 10 tab-separated columns, got {len(cols)}"
            )
        if "-" in cols[0] or "." in cols[0]:
            # Multiword range or empty-node row: preserved verbatim, not parsed.
            pending.append(line)
            continue
        try:
            token_id = int(cols[0])
        except ValueError:
            raise ConlluParseError(f"line {lineno}: non-integer token id {cols[0]!r}")
        try:
            head = int(cols[6])
        except ValueError:
            raise ConlluParseError(f"line {lineno}: non-integer head {cols[6]!r}")
        if not cols[1] or not cols[2]:
            raise ConlluParseError(f"line {lineno}: empty form or lemma column")
        misc = tuple(cols[9].split("|")) if cols[9] != "_" else ()
        tokens.append(
            Token(
                id=token_id,
                form=cols[1],
                lemma=cols[2],
                upos=cols[3],
                xpos=cols[4],
                feats=cols[5],
                head=head,
                deprel=cols[7],
                deps=cols[8],
                misc=misc,
                pre_lines=tuple(pending),
            )
        )
        pending = []
    finish(len(lines))

    if doc_id is None:
        doc_id = "doc"
    if sentences:
        for line in sentences[0].comments:
            m = _NEWDOC_RE.match(line)
            if m:
                doc_id = m.group(1)
                break
    return Document(doc_id, sentences)


def _check_sentence(sent: Sentence) -> None:
    ids = [t.id for t in sent.tokens]
    if ids != list(range(1, len(ids) + 1)):
        raise ConlluStructureError(
            f"sentence {sent.sent_id}: token ids are not consecutive from 1"
        )
    roots = [t.id for t in sent.tokens if t.head == 0]
    if len(roots) != 1:
        raise ConlluStructureError(
            f"sentence {sent.sent_id}: expected exactly one head=0 token, found {len(roots)}"
        )
    n = len(ids)
    for t in sent.tokens:
        if t.head < 0 or t.head > n:
            raise ConlluStructureError(
                f"sentence {sent.sent_id}: token {t.id} has head {t.head} outside 0..{n}"
            )
        if t.head == t.id:
            raise ConlluStructureError(
                f"sentence {sent.sent_id}: token {t.id} is its own head"
            )


def serialize_document(doc: Document) -> str:
    """Serialize a document; inverse of ``parse_document`` on well-formed input."""
    parts: list[str] = []
    for sent in doc.sentences:
        for line in sent.comments:
            parts.append(line)
        for tok in sent.tokens:
            parts.extend(tok.pre_lines)
            parts.append(tok.row())
        parts.extend(sent.trailing_lines)
        parts.append("")
    return "\n".join(parts) + "\n" if parts else ""


def format_ranges(ids) -> str:
    """Render a token-id set as inclusive ranges, e.g. ``1-2,4-4``."""
    out = []
    run_start = run_end = None
    for i in sorted(ids):
        if run_start is None:
            run_start = run_end = i
        elif i == run_end + 1:
            run_end = i
        else:
            out.append(f"{run_start}-{run_end}")
            run_start = run_end = i
    if run_start is not None:
        out.append(f"{run_start}-{run_end}")
    return ",".join(out)


def parse_ranges(spec: str) -> frozenset[int]:
    ids: set[int] = set()
    for part in spec.split(","):
        lo, _, hi = part.partition("-")
        ids.update(range(int(lo), int(hi) + 1))
    return frozenset(ids)


def attach_annotation(doc: Document, sent_id: str, ann) -> Document:
    """Return a new document with ``ann`` written onto the named sentence.

    ``ann`` must expose ``status``, ``theme_ids``, ``rheme_ids``,
    ``markedness``, ``modality`` and (optionally) ``rule``.  Re-attaching
    overwrites any previous TP data instead of duplicating it.
    """
    index = None
    for i, s in enumerate(doc.sentences):
        if s.sent_id == sent_id:
            index = i
            break
    if index is None:
        raise AnnotationError(f"unknown sentence id {sent_id!r}")
    sent = doc.sentences[index]
    valid = sent.token_ids()
    for span_name, span in (("theme", ann.theme_ids), ("rheme", ann.rheme_ids)):
        bad = set(span) - valid
        if bad:
            raise AnnotationError(
                f"sentence {sent_id}: {span_name} span references unknown token id {min(bad)}"
            )

    new_tokens = []
    for tok in sent.tokens:
        misc = tuple(e for e in tok.misc if not e.startswith("TP="))
        if ann.status == "ok":
            if tok.id in ann.theme_ids:
                tag = "Theme"
            elif tok.id in ann.rheme_ids:
                tag = "Rheme"
            else:
                tag = "Out"
            misc = misc + (f"TP={tag}",)
        new_tokens.append(replace(tok, misc=misc))

    comments = [c for c in sent.comments if not _TP_COMMENT_RE.match(c)]
    comments.append(f"# tp_status = {ann.status}")
    if ann.status == "ok":
        comments.append(f"# tp_theme = {format_ranges(ann.theme_ids)}")
        comments.append(f"# tp_rheme = {format_ranges(ann.rheme_ids)}")
        comments.append(f"# tp_markedness = {ann.markedness}")
        comments.append(f"# tp_modality = {ann.modality}")
        rule = getattr(ann, "rule", None)
        if rule:
            comments.append(f"# tp_rule = {rule}")

    new_sent = Sentence(sent.sent_id, comments, new_tokens, list(sent.trailing_lines))
    sentences = list(doc.sentences)
    sentences[index] = new_sent
    return Document(doc.doc_id, sentences)
