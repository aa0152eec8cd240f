"""Phase 2: concept clustering and progression-link classification.

Concept clusters are the connected components of the pairwise ``linked``
graph over all theme and rheme phrases of a document (single-link
transitive closure).  Link classification, by contrast, demands *direct*
pairwise evidence: two phrases sharing a component through an
intermediate hub is not, by itself, a repetition.  This keeps
classification aligned with hand application of the four progression
definitions (see the desk-corpus tests).

Versioned operationalisation (v1) of the four link kinds, where ``i`` and
``j`` are 1-based sentence ordinals, ``T_i``/``R_i`` the theme/rheme
phrase of sentence ``i``, and only ok-status sentences participate:

constant
    ``linked(T_i, T_j)`` for consecutive ok sentences ``i < j``.

linear
    ``linked(R_i, T_j)`` for consecutive ok sentences ``i < j``, unless
    the same (i, j) pair is already explained as split or derived.

split
    One rheme with direct links to the themes of two or more later
    sentences within the lookahead window: every such ``(i, j)`` becomes
    a split link.

derived
    A run of two or more consecutive ok themes, pairwise *unlinked* and
    free of constant links, each directly linked to an earlier rheme
    member of one common cluster whose pre-run members are predominantly
    rhemes.  That cluster is the operational hypertheme; each theme gets
    a derived link from its earliest rheme evidence.

Raising tau can only remove direct links, so constant/linear/split link
counts never grow with tau; the desk corpus keeps derived monotone too.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .annotate import read_annotation
from .conllu import Document
from .errors import TemaremaError
from .similarity import Phrase, PhraseKey, linked

_KIND_ORDER = {"constant": 0, "linear": 1, "split": 2, "derived": 3}


@dataclass(frozen=True)
class ConceptCluster:
    id: int
    members: tuple[PhraseKey, ...]
    label: str
    theme_count: int
    rheme_count: int


@dataclass(frozen=True)
class ProgressionLink:
    kind: str  # constant | linear | derived | split
    source: tuple[int, str]  # (sentence ordinal, slot)
    target: tuple[int, str]
    cluster: int
    hypertheme: int | None = None  # derived only


@dataclass(frozen=True)
class SpanRecord:
    """Theme and rheme phrase of one ok-status sentence."""

    ordinal: int  # 1-based position in the document
    theme: Phrase
    rheme: Phrase


@dataclass(frozen=True)
class SchemaGraph:
    doc_id: str
    parameters: dict
    concepts: tuple[ConceptCluster, ...]
    links: tuple[ProgressionLink, ...]
    sentence_order: tuple[str, ...] = ()
    member_modality: dict = field(default_factory=dict)
    diagnostics: dict = field(default_factory=dict)


class _ScoreCache:
    def __init__(self, provider, tau):
        self.provider = provider
        self.tau = tau
        self._memo: dict[tuple[str, str], bool] = {}

    def linked(self, a: Phrase, b: Phrase) -> bool:
        key = tuple(sorted((a.key.as_string(), b.key.as_string())))
        if key not in self._memo:
            self._memo[key] = linked(a, b, self.provider, self.tau)
        return self._memo[key]


def build_clusters(spans, provider, tau) -> list[ConceptCluster]:
    """Connected components of the linked graph, in first-occurrence order."""
    phrases = list(spans)
    n = len(phrases)
    cache = _ScoreCache(provider, tau)
    adjacency: list[list[int]] = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if cache.linked(phrases[i], phrases[j]):
                adjacency[i].append(j)
                adjacency[j].append(i)
    clusters = []
    seen: set[int] = set()
    for start in range(n):
        if start in seen:
            continue
        component = []
        stack = [start]
        seen.add(start)
        while stack:
            current = stack.pop()
            component.append(current)
            for nxt in adjacency[current]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        component.sort()
        members = tuple(phrases[i].key for i in component)
        clusters.append(
            ConceptCluster(
                id=len(clusters),
                members=members,
                label=_label(phrases[i] for i in component),
                theme_count=sum(1 for k in members if k.slot == "T"),
                rheme_count=sum(1 for k in members if k.slot == "R"),
            )
        )
    return clusters


def _label(phrases) -> str:
    """Most frequent content lemma; ties go to the earliest occurrence."""
    from .similarity import CONTENT_POS

    counts: dict[str, int] = {}
    first_seen: dict[str, tuple[int, str]] = {}
    position = 0
    for phrase in phrases:
        for lemma, upos in phrase.items:
            if upos not in CONTENT_POS:
                continue
            folded = lemma.casefold()
            counts[folded] = counts.get(folded, 0) + 1
            if folded not in first_seen:
                first_seen[folded] = (position, lemma)
            position += 1
    if not counts:
        return ""
    winner = min(counts, key=lambda k: (-counts[k], first_seen[k][0]))
    return first_seen[winner][1]


def classify_links(
    records: list[SpanRecord],
    clusters: list[ConceptCluster],
    provider,
    tau: float,
    window: int,
) -> list[ProgressionLink]:
    cache = _ScoreCache(provider, tau)
    cluster_of: dict[str, int] = {}
    for cluster in clusters:
        for member in cluster.members:
            cluster_of[member.as_string()] = cluster.id
    ordinal_of: dict[str, int] = {}
    for rec in records:
        ordinal_of[rec.theme.key.as_string()] = rec.ordinal
        ordinal_of[rec.rheme.key.as_string()] = rec.ordinal

    links: list[ProgressionLink] = []

    # Constant: direct theme repetition across consecutive ok sentences.
    constant_members: set[int] = set()
    for prev, nxt in zip(records, records[1:]):
        if cache.linked(prev.theme, nxt.theme):
            links.append(
                ProgressionLink(
                    "constant",
                    (prev.ordinal, "T"),
                    (nxt.ordinal, "T"),
                    cluster_of[prev.theme.key.as_string()],
                )
            )
            constant_members.update((prev.ordinal, nxt.ordinal))

    # Split: one rheme feeding two or more later themes inside the window.
    split_pairs: set[tuple[int, int]] = set()
    split_targets: set[int] = set()
    for i, rec in enumerate(records):
        targets = [
            later
            for later in records[i + 1 :]
            if later.ordinal - rec.ordinal <= window
            and cache.linked(rec.rheme, later.theme)
        ]
        if len(targets) < 2:
            continue
        for later in targets:
            links.append(
                ProgressionLink(
                    "split",
                    (rec.ordinal, "R"),
                    (later.ordinal, "T"),
                    cluster_of[rec.rheme.key.as_string()],
                )
            )
            split_pairs.add((rec.ordinal, later.ordinal))
            split_targets.add(later.ordinal)

    # Derived: pairwise-unrelated theme runs hanging off one earlier
    # rheme-dominant cluster (the operational hypertheme).
    derived_pairs: set[tuple[int, int]] = set()

    def evidence(rec: SpanRecord, before: int) -> dict[int, int]:
        """Hypertheme candidates: cluster id -> earliest evidence ordinal."""
        out: dict[int, int] = {}
        for earlier in records:
            if earlier.ordinal >= before:
                break
            if cache.linked(rec.theme, earlier.rheme):
                cid = cluster_of[earlier.rheme.key.as_string()]
                out.setdefault(cid, earlier.ordinal)
        return out

    def eligible(rec: SpanRecord) -> bool:
        return rec.ordinal not in constant_members and rec.ordinal not in split_targets

    # Evidence bounds are always the run start, so a candidate cluster that
    # survives the intersection is guaranteed to have pre-run evidence for
    # every member when the links are emitted.
    runs: list[tuple[list[SpanRecord], set[int]]] = []
    for prev, nxt in zip(records, records[1:]):
        if not (eligible(prev) and eligible(nxt)):
            continue
        if cache.linked(prev.theme, nxt.theme):
            continue
        if runs and runs[-1][0][-1] is prev:
            members, candidates = runs[-1]
            start = members[0].ordinal
            if all(not cache.linked(m.theme, nxt.theme) for m in members[:-1]):
                common = candidates & set(evidence(nxt, start))
                if common:
                    members.append(nxt)
                    candidates.intersection_update(common)
                    continue
        common = set(evidence(prev, prev.ordinal)) & set(evidence(nxt, prev.ordinal))
        if common:
            runs.append(([prev, nxt], common))
    emitted_derived: set[tuple[int, int]] = set()
    for members, candidates in runs:
        start = members[0].ordinal
        chosen = None
        for cid in sorted(candidates):
            cluster = clusters[cid]
            earlier = [m for m in cluster.members if ordinal_of[m.as_string()] < start]
            rhemes = sum(1 for m in earlier if m.slot == "R")
            themes = len(earlier) - rhemes
            if earlier and rhemes > themes:
                chosen = cid
                break
        if chosen is None:
            continue
        for rec in members:
            source = evidence(rec, start)[chosen]
            if (source, rec.ordinal) in emitted_derived:
                continue  # overlapping runs may revisit a theme
            emitted_derived.add((source, rec.ordinal))
            links.append(
                ProgressionLink(
                    "derived",
                    (source, "R"),
                    (rec.ordinal, "T"),
                    chosen,
                    hypertheme=chosen,
                )
            )
            derived_pairs.add((source, rec.ordinal))

    # Linear: rheme-to-next-theme, unless split/derived already covers the pair.
    for prev, nxt in zip(records, records[1:]):
        pair = (prev.ordinal, nxt.ordinal)
        if pair in split_pairs or pair in derived_pairs:
            continue
        if cache.linked(prev.rheme, nxt.theme):
            links.append(
                ProgressionLink(
                    "linear",
                    (prev.ordinal, "R"),
                    (nxt.ordinal, "T"),
                    cluster_of[prev.rheme.key.as_string()],
                )
            )

    links.sort(key=lambda l: (l.source[0], l.target[0], _KIND_ORDER[l.kind]))
    return links


def annotation_records(doc: Document) -> tuple[list[SpanRecord], dict]:
    """Extract ok-sentence phrase records from an annotated document."""
    records = []
    counts = {"ok": 0, "no_theme": 0, "rejected": 0, "unannotated": 0}
    for ordinal, sent in enumerate(doc.sentences, start=1):
        ann = read_annotation(sent)
        if ann is None:
            counts["unannotated"] += 1
            continue
        counts[ann.status] = counts.get(ann.status, 0) + 1
        if ann.status != "ok":
            continue
        records.append(
            SpanRecord(
                ordinal=ordinal,
                theme=_phrase(doc.doc_id, sent, ann.theme_ids, "T"),
                rheme=_phrase(doc.doc_id, sent, ann.rheme_ids, "R"),
            )
        )
    return records, counts


def _phrase(doc_id: str, sent, ids, slot: str) -> Phrase:
    tokens = [t for t in sent.tokens if t.id in ids]
    return Phrase(
        key=PhraseKey(doc_id, sent.sent_id, slot),
        items=tuple((t.lemma, t.upos) for t in tokens),
        text=" ".join(t.form for t in tokens),
    )


def build_schema(doc: Document, provider, tau: float, window: int) -> SchemaGraph:
    """Assemble the conceptual schema of one annotated document."""
    records, counts = annotation_records(doc)
    spans: list[Phrase] = []
    modality: dict[str, str] = {}
    for rec in records:
        spans.extend((rec.theme, rec.rheme))
    for sent in doc.sentences:
        ann = read_annotation(sent)
        if ann is not None and ann.status == "ok" and ann.modality:
            for slot in ("T", "R"):
                modality[PhraseKey(doc.doc_id, sent.sent_id, slot).as_string()] = (
                    ann.modality
                )
    clusters = build_clusters(spans, provider, tau)
    links = classify_links(records, clusters, provider, tau, window)
    diagnostics = dict(counts)
    if hasattr(provider, "fallbacks"):
        diagnostics["embedding_fallbacks"] = provider.fallbacks
    return SchemaGraph(
        doc_id=doc.doc_id,
        parameters={"provider": provider.name, "tau": tau, "window": window},
        concepts=tuple(clusters),
        links=tuple(links),
        sentence_order=tuple(s.sent_id for s in doc.sentences),
        member_modality=modality,
        diagnostics=diagnostics,
    )


def export_schema(graph: SchemaGraph, fmt: str) -> bytes:
    """Render the schema as canonical JSON or DOT; byte-deterministic."""
    if fmt == "json":
        payload = {
            "doc_id": graph.doc_id,
            "parameters": {
                "provider": graph.parameters["provider"],
                "tau": graph.parameters["tau"],
                "window": graph.parameters["window"],
            },
            "concepts": [
                {
                    "id": c.id,
                    "label": c.label,
                    "theme_count": c.theme_count,
                    "rheme_count": c.rheme_count,
                    "members": [m.as_string() for m in c.members],
                }
                for c in graph.concepts
            ],
            "links": [
                {
                    "kind": l.kind,
                    "from": [l.source[0], l.source[1]],
                    "to": [l.target[0], l.target[1]],
                    "cluster": l.cluster,
                    "hypertheme": l.hypertheme,
                }
                for l in graph.links
            ],
        }
        return (json.dumps(payload, ensure_ascii=False, separators=(",", ":")) + "\n").encode(
            "utf-8"
        )
    if fmt == "dot":
        return _to_dot(graph).encode("utf-8")
    raise TemaremaError(f"unknown schema format {fmt!r}")


def _to_dot(graph: SchemaGraph) -> str:
    # Edges run between the theme concepts of the linked sentences, which
    # renders the conceptual flow; constant progression becomes a self-loop.
    theme_cluster: dict[int, int] = {}
    for cluster in graph.concepts:
        for member in cluster.members:
            if member.slot != "T":
                continue
            try:
                ordinal = graph.sentence_order.index(member.sent_id) + 1
            except ValueError:
                continue
            theme_cluster[ordinal] = cluster.id
    lines = ["digraph schema {"]
    for c in graph.concepts:
        label = c.label.replace('"', '\\"')
        lines.append(f'  c{c.id} [label="{label} ({c.theme_count})"];')
    for l in graph.links:
        src = theme_cluster.get(l.source[0], l.cluster)
        dst = theme_cluster.get(l.target[0], l.cluster)
        lines.append(f'  c{src} -> c{dst} [label="{l.kind}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
