"""Declarative tree-selection rule language: parsing and execution.

Grammar files are UTF-8 text with ``#`` line comments and three kinds of
declaration::

    lex <name> = { <lemma> [, <lemma>]* }
    <rulename> : child: <REL>( { <item> [; <item>]* } , ALL|ONE ) [as $<var>]
    <rulename> : head:  <REL>( { <item> [; <item>]* } , ALL|ONE ) [as $<var>]
    program <name> { <rulename> [, <rulename>]* }

Pattern items are either feature constraints on the non-selected endpoint
of the traversed relation (``deprel:X``, ``upos:X``, ``lemma:X``,
``form:X``, ``feat.Key:X``, ``lemma@<lexicon>``, ``node:$<var>``) or
positional predicates on the edge itself (``precedes:head`` /
``follows:head``, read as: the child occurs before / after its head).

Semantics.  A child-selection rule matches every edge ``head --REL-->
child`` whose head satisfies the pattern; it selects the child (ONE) or
the child's whole subtree (ALL).  A head-selection rule matches every
such edge whose child satisfies the pattern; it selects the head (ONE)
or the head's subtree minus the matched child's subtree (ALL), which is
how a clause is carved out of its sentence.

A program applies its rules in order and returns the first selection,
picking the earliest anchor when a rule matches several places.  One
extension supports patterns that need two edges through the same node:
a rule whose ``as $x`` capture is consumed by a later rule of the same
program (via ``node:$x``) acts as a binder — it records the anchor of
its earliest match and passes control on instead of returning.  Unbound
variables never match, so a chain whose binder failed simply falls
through to the remaining rules.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import GrammarError
from .tree import DepTree, subtree_tokens

_VALID_FIELDS = ("deprel", "upos", "lemma", "form", "node")
_POSITIONALS = ("precedes:head", "follows:head")


@dataclass(frozen=True)
class Constraint:
    field: str  # deprel | upos | lemma | form | feat.<Key> | node
    op: str  # "eq" or "lex"
    value: str
    lemmas: frozenset[str] | None = None  # resolved set for op == "lex"


@dataclass(frozen=True)
class NodePattern:
    constraints: tuple[Constraint, ...]
    positional: str | None = None  # "precedes" | "follows"


@dataclass(frozen=True)
class Rule:
    name: str
    kind: str  # "child" | "head"
    relation: str
    pattern: NodePattern
    mode: str  # "ALL" | "ONE"
    capture: str | None = None


@dataclass(frozen=True)
class Lexicon:
    name: str
    lemmas: frozenset[str]


@dataclass(frozen=True)
class Grammar:
    lexicons: dict[str, Lexicon]
    rules: dict[str, Rule]
    programs: dict[str, tuple[str, ...]]


@dataclass(frozen=True)
class Selection:
    """One match of a rule: the selected token set plus its provenance edge."""

    tokens: tuple[int, ...]
    anchor: int
    head: int
    child: int


@dataclass(frozen=True)
class ProgramResult:
    tokens: tuple[int, ...]
    anchor: int
    rule: str
    captures: dict[str, int]


_RULE_RE = re.compile(
    r"^(?P<name>[A-Za-z_]\w*)\s*:\s*(?P<kind>child|head)\s*:\s*"
    r"(?P<rel>[^\s(]+)\s*\(\s*\{(?P<items>[^}]*)\}\s*,\s*(?P<mode>ALL|ONE)\s*\)"
    r"\s*(?:as\s+\$(?P<cap>[A-Za-z_]\w*))?\s*$"
)
_LEX_RE = re.compile(
    r"^lex\s+(?P<name>[A-Za-z_]\w*)\s*=\s*\{(?P<body>[^}]*)\}\s*$"
)
_PROGRAM_RE = re.compile(
    r"^program\s+(?P<name>[A-Za-z_]\w*)\s*\{(?P<body>[^}]*)\}\s*$"
)


def _strip_comment(line: str) -> str:
    pos = line.find("#")
    return line if pos < 0 else line[:pos]


def _parse_items(items: str, lineno: int) -> NodePattern:
    constraints = []
    positional = None
    for raw in items.split(";"):
        item = raw.strip()
        if not item:
            continue
        if item in _POSITIONALS:
            if positional is not None:
                raise GrammarError(f"line {lineno}: duplicate positional predicate")
            positional = item.split(":")[0]
            continue
        if "@" in item and ":" not in item:
            fieldname, _, lexname = item.partition("@")
            if fieldname.strip() != "lemma":
                raise GrammarError(
                    f"line {lineno}: only lemma@<lexicon> constraints are supported"
                )
            constraints.append(Constraint("lemma", "lex", lexname.strip()))
            continue
        fieldname, sep, value = item.partition(":")
        fieldname = fieldname.strip()
        value = value.strip()
        if not sep or not value:
            raise GrammarError(
                f"line {lineno}: malformed pattern item {item!r} "
                f"(column {items.find(raw) + 1})"
            )
        if fieldname == "node":
            if not value.startswith("$"):
                raise GrammarError(f"line {lineno}: node constraint needs a $variable")
            constraints.append(Constraint("node", "eq", value[1:]))
        elif fieldname in _VALID_FIELDS or fieldname.startswith("feat."):
            constraints.append(Constraint(fieldname, "eq", value))
        else:
            raise GrammarError(f"line {lineno}: unknown constraint field {fieldname!r}")
    if not constraints and positional is None:
        raise GrammarError(f"line {lineno}: pattern needs at least one constraint")
    return NodePattern(tuple(constraints), positional)


def parse_grammar(text: str) -> Grammar:
    """Parse and validate a grammar file; errors carry the offending line."""
    lexicons: dict[str, Lexicon] = {}
    rules: dict[str, Rule] = {}
    programs: dict[str, tuple[str, ...]] = {}

    # Programs may span lines; fold continuation lines onto the opener.
    logical: list[tuple[int, str]] = []
    buffer = ""
    buffer_line = 0
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        if buffer:
            buffer += " " + line
            if "}" in line:
                logical.append((buffer_line, buffer))
                buffer = ""
            continue
        if "{" in line and "}" not in line:
            buffer = line
            buffer_line = lineno
            continue
        logical.append((lineno, line))
    if buffer:
        raise GrammarError(f"line {buffer_line}: unterminated '{{'")

    for lineno, line in logical:
        m = _LEX_RE.match(line)
        if m:
            name = m.group("name")
            if name in lexicons:
                raise GrammarError(f"line {lineno}: duplicate lexicon {name!r}")
            lemmas = frozenset(
                w.strip() for w in m.group("body").split(",") if w.strip()
            )
            if not lemmas:
                raise GrammarError(f"line {lineno}: lexicon {name!r} is empty")
            lexicons[name] = Lexicon(name, lemmas)
            continue
        m = _PROGRAM_RE.match(line)
        if m:
            name = m.group("name")
            if name in programs:
                raise GrammarError(f"line {lineno}: duplicate program {name!r}")
            entries = tuple(
                w.strip() for w in m.group("body").split(",") if w.strip()
            )
            if not entries:
                raise GrammarError(f"line {lineno}: program {name!r} is empty")
            programs[name] = entries
            continue
        m = _RULE_RE.match(line)
        if m:
            name = m.group("name")
            if name in rules:
                raise GrammarError(f"line {lineno}: duplicate rule {name!r}")
            pattern = _parse_items(m.group("items"), lineno)
            rules[name] = Rule(
                name=name,
                kind=m.group("kind"),
                relation=m.group("rel"),
                pattern=pattern,
                mode=m.group("mode"),
                capture=m.group("cap"),
            )
            continue
        raise GrammarError(f"line {lineno}: unrecognised declaration (column 1)")

    # Cross-reference checks.
    for rule in rules.values():
        for c in rule.pattern.constraints:
            if c.op == "lex" and c.value not in lexicons:
                raise GrammarError(
                    f"rule {rule.name!r} references undefined lexicon {c.value!r}"
                )
    resolved_rules = {
        name: _resolve_lexicons(rule, lexicons) for name, rule in rules.items()
    }
    for pname, entries in programs.items():
        bound: set[str] = set()
        for entry in entries:
            if entry not in resolved_rules:
                raise GrammarError(
                    f"program {pname!r} references undefined rule {entry!r}"
                )
            rule = resolved_rules[entry]
            for c in rule.pattern.constraints:
                if c.field == "node" and c.value not in bound:
                    raise GrammarError(
                        f"program {pname!r}: rule {entry!r} uses unbound variable ${c.value}"
                    )
            if rule.capture:
                bound.add(rule.capture)
    return Grammar(lexicons, resolved_rules, programs)


def _resolve_lexicons(rule: Rule, lexicons: dict[str, Lexicon]) -> Rule:
    new = tuple(
        Constraint(c.field, c.op, c.value, lexicons[c.value].lemmas)
        if c.op == "lex"
        else c
        for c in rule.pattern.constraints
    )
    if new == rule.pattern.constraints:
        return rule
    return Rule(
        rule.name,
        rule.kind,
        rule.relation,
        NodePattern(new, rule.pattern.positional),
        rule.mode,
        rule.capture,
    )


def format_grammar(grammar: Grammar) -> str:
    """Canonical text form; ``parse_grammar(format_grammar(g)) == g``."""
    lines = []
    for lex in grammar.lexicons.values():
        lines.append(f"lex {lex.name} = {{ {', '.join(sorted(lex.lemmas))} }}")
    if grammar.lexicons:
        lines.append("")
    for rule in grammar.rules.values():
        items = []
        for c in rule.pattern.constraints:
            if c.op == "lex":
                items.append(f"{c.field}@{c.value}")
            elif c.field == "node":
                items.append(f"node:${c.value}")
            else:
                items.append(f"{c.field}:{c.value}")
        if rule.pattern.positional:
            items.append(f"{rule.pattern.positional}:head")
        suffix = f" as ${rule.capture}" if rule.capture else ""
        lines.append(
            f"{rule.name} : {rule.kind}: {rule.relation}"
            f"( {{ {' ; '.join(items)} }}, {rule.mode} ){suffix}"
        )
    if grammar.rules:
        lines.append("")
    for name, entries in grammar.programs.items():
        lines.append(f"program {name} {{ {', '.join(entries)} }}")
    return "\n".join(lines) + "\n"


def _satisfies(
    tree: DepTree,
    pattern: NodePattern,
    subject: int,
    head: int,
    child: int,
    bindings: dict[str, int],
) -> bool:
    tok = tree.nodes[subject]
    for c in pattern.constraints:
        if c.field == "deprel":
            ok = tok.deprel == c.value
        elif c.field == "upos":
            ok = tok.upos == c.value
        elif c.field == "form":
            ok = tok.form == c.value
        elif c.field == "lemma" and c.op == "lex":
            ok = tok.lemma in c.lemmas
        elif c.field == "lemma":
            ok = tok.lemma == c.value
        elif c.field == "node":
            ok = bindings.get(c.value) == subject
        elif c.field.startswith("feat."):
            ok = tok.feats_dict().get(c.field[5:]) == c.value
        else:  # pragma: no cover - rejected at parse time
            ok = False
        if not ok:
            return False
    if pattern.positional == "precedes":
        return child < head
    if pattern.positional == "follows":
        return child > head
    return True


def _edges(tree: DepTree, relation: str):
    for head in sorted(tree.children):
        for child in tree.children[head]:
            if tree.nodes[child].deprel == relation:
                yield head, child


def match_child(
    tree: DepTree, rule: Rule, bindings: dict[str, int] | None = None
) -> list[Selection]:
    """All selections of a child-selection rule, ordered by child position."""
    if rule.kind != "child":
        raise GrammarError(f"rule {rule.name!r} is not a child-selection rule")
    bindings = bindings or {}
    out = []
    for head, child in _edges(tree, rule.relation):
        if not _satisfies(tree, rule.pattern, head, head, child, bindings):
            continue
        tokens = (
            tuple(subtree_tokens(tree, child)) if rule.mode == "ALL" else (child,)
        )
        out.append(Selection(tokens, anchor=child, head=head, child=child))
    out.sort(key=lambda s: (s.anchor, s.head))
    return out


def match_head(
    tree: DepTree, rule: Rule, bindings: dict[str, int] | None = None
) -> list[Selection]:
    """All selections of a head-selection rule, ordered by head position.

    In ALL mode the matched child's subtree is removed from the head's
    subtree, which is the simplification primitive: matching the clause
    child of a sentence head yields the sentence without that clause.
    """
    if rule.kind != "head":
        raise GrammarError(f"rule {rule.name!r} is not a head-selection rule")
    bindings = bindings or {}
    out = []
    for head, child in _edges(tree, rule.relation):
        if not _satisfies(tree, rule.pattern, child, head, child, bindings):
            continue
        if rule.mode == "ALL":
            keep = set(subtree_tokens(tree, head)) - set(subtree_tokens(tree, child))
            tokens = tuple(sorted(keep))
        else:
            tokens = (head,)
        out.append(Selection(tokens, anchor=head, head=head, child=child))
    out.sort(key=lambda s: (s.anchor, s.child))
    return out


def match_rule(
    tree: DepTree, rule: Rule, bindings: dict[str, int] | None = None
) -> list[Selection]:
    if rule.kind == "child":
        return match_child(tree, rule, bindings)
    return match_head(tree, rule, bindings)


def apply_program(
    tree: DepTree, grammar: Grammar, program: str
) -> ProgramResult | None:
    """Run a program: first non-binder rule with a match wins.

    Returns the earliest-anchor selection of the firing rule together with
    every variable bound along the way, or ``None`` when nothing matched.
    """
    if program not in grammar.programs:
        raise GrammarError(f"unknown program {program!r}")
    entries = grammar.programs[program]
    consumed: set[str] = set()
    for name in entries:
        for c in grammar.rules[name].pattern.constraints:
            if c.field == "node":
                consumed.add(c.value)
    bindings: dict[str, int] = {}
    for name in entries:
        rule = grammar.rules[name]
        matches = match_rule(tree, rule, bindings)
        if not matches:
            continue
        best = matches[0]
        if rule.capture:
            bindings[rule.capture] = best.anchor
            if rule.capture in consumed:
                continue  # binder rule: feeds later rules, never fires itself
        return ProgramResult(best.tokens, best.anchor, name, dict(bindings))
    return None
