"""Phase 1: per-sentence theme/rheme annotation.

A theme grammar drives the whole pass through three programs, all data,
no code:

``simplify``
    Selects the main proposition.  Typical rules strip adverbial clauses
    from the root clause or descend into the content clause when the
    root verb is a copular shell, a reporting verb, or an attitude verb.
    Unmatched sentences keep all their tokens.

``thematization``
    Recognises focus-fronting constructions (clefts).  When it fires,
    its selection is the theme and the markedness class is
    ``thematized`` regardless of subject position.

``theme``
    Selects the theme inside the (re-rooted) main proposition.  The
    markedness class is derived from the name of the rule that fired:
    names starting with ``marked`` yield ``marked``, everything else
    ``unmarked``.  Rules named ``theme_sbj*`` are treated as
    preceding-subject rules by the corpus statistics.

Modality is inferred from the main verb: a root lemma listed in the
grammar's ``report_verbs`` lexicon yields ``reported``, one listed in
``attitude_verbs`` yields ``attitude``, anything else ``factual``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .conllu import Document, Sentence, attach_annotation, parse_ranges
from .errors import GrammarError, TemaremaError
from .rules import Grammar, ProgramResult, apply_program
from .tree import DepTree, build_tree, restricted

REPORT_LEXICON = "report_verbs"
ATTITUDE_LEXICON = "attitude_verbs"
SUBJECT_RULE_PREFIX = "theme_sbj"
MARKED_RULE_PREFIX = "marked"


@dataclass(frozen=True)
class ThemeRhemeAnnotation:
    sent_id: str
    status: str  # ok | no_theme | rejected
    theme_ids: frozenset[int] = frozenset()
    rheme_ids: frozenset[int] = frozenset()
    main_prop_ids: frozenset[int] = frozenset()
    markedness: str | None = None  # unmarked | marked | thematized
    modality: str | None = None  # factual | reported | attitude
    rule: str | None = None  # theme-selecting rule that fired


def _no_theme(sent_id: str) -> ThemeRhemeAnnotation:
    return ThemeRhemeAnnotation(sent_id, "no_theme")


def rejected(sent_id: str) -> ThemeRhemeAnnotation:
    return ThemeRhemeAnnotation(sent_id, "rejected")


def simplify(tree: DepTree, grammar: Grammar) -> tuple[frozenset[int], str]:
    """Select the main proposition and infer the modality label.

    Sentences the ``simplify`` program does not match pass through whole.
    """
    main: frozenset[int]
    if "simplify" in grammar.programs:
        result = apply_program(tree, grammar, "simplify")
        main = frozenset(result.tokens) if result else frozenset(tree.nodes)
    else:
        main = frozenset(tree.nodes)
    root_lemma = tree.nodes[tree.root].lemma
    modality = "factual"
    if REPORT_LEXICON in grammar.lexicons and root_lemma in grammar.lexicons[REPORT_LEXICON].lemmas:
        modality = "reported"
    elif ATTITUDE_LEXICON in grammar.lexicons and root_lemma in grammar.lexicons[ATTITUDE_LEXICON].lemmas:
        modality = "attitude"
    return main, modality


def _thematization(tree: DepTree, grammar: Grammar) -> ProgramResult | None:
    if "thematization" not in grammar.programs:
        return None
    return apply_program(tree, grammar, "thematization")


def detect_thematization(tree: DepTree, grammar: Grammar) -> frozenset[int] | None:
    """Focused constituent of a cleft-like construction, if one matches."""
    result = _thematization(tree, grammar)
    return frozenset(result.tokens) if result else None


def annotate_sentence(tree: DepTree, grammar: Grammar) -> ThemeRhemeAnnotation:
    main, modality = simplify(tree, grammar)
    sub = restricted(tree, main)

    focus = _thematization(sub, grammar)
    if focus is not None:
        theme = frozenset(focus.tokens)
        markedness = "thematized"
        rule = focus.rule
    else:
        result = apply_program(sub, grammar, "theme")
        if result is None:
            return _no_theme(tree.sent_id)
        theme = frozenset(result.tokens)
        markedness = (
            "marked" if result.rule.startswith(MARKED_RULE_PREFIX) else "unmarked"
        )
        rule = result.rule
    rheme = main - theme
    if not theme or not rheme:
        return _no_theme(tree.sent_id)
    return ThemeRhemeAnnotation(
        sent_id=tree.sent_id,
        status="ok",
        theme_ids=theme,
        rheme_ids=rheme,
        main_prop_ids=main,
        markedness=markedness,
        modality=modality,
        rule=rule,
    )


def annotate_document(doc: Document, grammar: Grammar) -> Document:
    """Annotate every sentence; per-sentence failures become ``rejected``.

    A grammar without a ``theme`` program is a configuration error, not a
    per-sentence one, and fails fast instead of rejecting everything.
    """
    if "theme" not in grammar.programs:
        raise GrammarError("grammar defines no 'theme' program")
    out = doc
    for sent in doc.sentences:
        try:
            ann = annotate_sentence(build_tree(sent), grammar)
        except TemaremaError:
            ann = rejected(sent.sent_id)
        out = attach_annotation(out, sent.sent_id, ann)
    return out


def read_annotation(sent: Sentence) -> ThemeRhemeAnnotation | None:
    """Reconstruct the annotation from a sentence's tp_* comment block."""
    meta = sent.tp_meta()
    status = meta.get("status")
    if status is None:
        return None
    if status != "ok":
        return ThemeRhemeAnnotation(sent.sent_id, status)
    theme = parse_ranges(meta["theme"])
    rheme = parse_ranges(meta["rheme"])
    return ThemeRhemeAnnotation(
        sent_id=sent.sent_id,
        status="ok",
        theme_ids=theme,
        rheme_ids=rheme,
        main_prop_ids=theme | rheme,
        markedness=meta.get("markedness"),
        modality=meta.get("modality"),
        rule=meta.get("rule"),
    )
