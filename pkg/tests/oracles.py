"""Brute-force reference implementations used as independent test oracles.

Everything here works on plain row tuples and dicts, deliberately sharing
no code with the package: subtree membership is computed by iterated set
closure over the head relation, rule matching by scanning every
(head, child) pair, clustering by union-find over all pairwise decisions.
"""

from __future__ import annotations

import random

DEPRELS = ("SBJ", "DO", "ADV", "ATR", "MOD", "XX")
UPOS = ("NOUN", "VERB", "ADJ", "ADV")
LEMMAS = ("a", "b", "c", "d")
FEAT_VALUES = ("One", "Two")


def naive_subtree(heads: dict[int, int], node: int) -> set[int]:
    """Set closure: keep absorbing tokens whose head is already inside."""
    inside = {node}
    changed = True
    while changed:
        changed = False
        for child, head in heads.items():
            if head in inside and child not in inside:
                inside.add(child)
                changed = True
    return inside


def naive_matches(rows: dict[int, dict], rule: dict) -> list[tuple[int, tuple[int, ...]]]:
    """All (anchor, selected tokens) pairs of a rule, brute force.

    ``rows`` maps token id to a dict with form/lemma/upos/feats/head/deprel;
    ``rule`` is a plain dict: kind, relation, mode, constraints (list of
    (field, value) with field possibly ``feat.K`` or ``lex`` for a lemma
    set), positional (None | precedes | follows).
    """
    heads = {i: r["head"] for i, r in rows.items()}

    def satisfied(subject: int, head: int, child: int) -> bool:
        row = rows[subject]
        for field, value in rule["constraints"]:
            if field == "lex":
                if row["lemma"] not in value:
                    return False
            elif field.startswith("feat."):
                if row["feats"].get(field[5:]) != value:
                    return False
            elif row[field] != value:
                return False
        if rule["positional"] == "precedes" and not child < head:
            return False
        if rule["positional"] == "follows" and not child > head:
            return False
        return True

    results = []
    for child, row in rows.items():
        head = row["head"]
        if head == 0 or row["deprel"] != rule["relation"]:
            continue
        subject = head if rule["kind"] == "child" else child
        if not satisfied(subject, head, child):
            continue
        if rule["kind"] == "child":
            tokens = naive_subtree(heads, child) if rule["mode"] == "ALL" else {child}
            results.append((child, head, tuple(sorted(tokens))))
        else:
            if rule["mode"] == "ALL":
                tokens = naive_subtree(heads, head) - naive_subtree(heads, child)
            else:
                tokens = {head}
            results.append((head, child, tuple(sorted(tokens))))
    results.sort(key=lambda item: (item[0], item[1]))
    return [(anchor, tokens) for anchor, _, tokens in results]


def random_tree_rows(rng: random.Random, max_nodes: int = 12) -> list[tuple]:
    """Random labelled tree as CoNLL-U-style row tuples (ids 1..n)."""
    n = rng.randint(1, max_nodes)
    parent = {1: 0}
    for node in range(2, n + 1):
        parent[node] = rng.randint(1, node - 1)
    labels = list(range(1, n + 1))
    rng.shuffle(labels)
    relabel = {old: labels[old - 1] for old in range(1, n + 1)}
    rows = [None] * n
    for old in range(1, n + 1):
        new = relabel[old]
        head = 0 if parent[old] == 0 else relabel[parent[old]]
        deprel = "ROOT" if head == 0 else rng.choice(DEPRELS)
        feats = (
            f"K={rng.choice(FEAT_VALUES)}" if rng.random() < 0.5 else "_"
        )
        rows[new - 1] = (
            f"w{new}",
            rng.choice(LEMMAS),
            rng.choice(UPOS),
            feats,
            head,
            deprel,
        )
    return rows


def random_rule_spec(rng: random.Random, relations=None) -> tuple[str, dict]:
    """A random rule as (grammar text, oracle spec); both from one draw.

    ``relations`` biases the traversed relation towards labels that occur
    in the tree under test, so the oracle comparison exercises plenty of
    non-empty matches without losing the empty-match cases.
    """
    kind = rng.choice(("child", "head"))
    pool = DEPRELS + ("ROOT",)
    if relations and rng.random() < 0.8:
        # The root label never occurs on a traversable edge; skip it so the
        # bias actually yields positive matches.
        traversable = tuple(r for r in relations if r != "ROOT")
        pool = traversable or pool
    relation = rng.choice(pool)
    mode = rng.choice(("ALL", "ONE"))
    items = []
    constraints = []
    lex_text = ""
    n_constraints = rng.randint(0, 2)
    for _ in range(n_constraints):
        choice = rng.randrange(5)
        if choice == 4 and lex_text:
            choice = rng.randrange(4)  # one lexicon constraint at most
        if choice == 0:
            value = rng.choice(DEPRELS + ("ROOT",))
            items.append(f"deprel:{value}")
            constraints.append(("deprel", value))
        elif choice == 1:
            value = rng.choice(UPOS)
            items.append(f"upos:{value}")
            constraints.append(("upos", value))
        elif choice == 2:
            value = rng.choice(LEMMAS)
            items.append(f"lemma:{value}")
            constraints.append(("lemma", value))
        elif choice == 3:
            value = rng.choice(FEAT_VALUES)
            items.append(f"feat.K:{value}")
            constraints.append(("feat.K", value))
        else:
            members = rng.sample(LEMMAS, rng.randint(1, 3))
            lex_text = f"lex probe = {{ {', '.join(members)} }}\n"
            items.append("lemma@probe")
            constraints.append(("lex", frozenset(members)))
    positional = rng.choice((None, "precedes", "follows"))
    if positional:
        items.append(f"{positional}:head")
    if not items:
        items.append("upos:" + rng.choice(UPOS))
        constraints.append(("upos", items[0].split(":")[1]))
    text = (
        lex_text
        + f"probe_rule : {kind}: {relation}( {{ {' ; '.join(items)} }}, {mode} )\n"
    )
    spec = {
        "kind": kind,
        "relation": relation,
        "mode": mode,
        "constraints": constraints,
        "positional": positional,
    }
    return text, spec


def rows_to_oracle(rows) -> dict[int, dict]:
    out = {}
    for i, (form, lemma, upos, feats, head, deprel) in enumerate(rows, start=1):
        feat_map = {}
        if feats != "_":
            for item in feats.split("|"):
                key, _, value = item.partition("=")
                feat_map[key] = value
        out[i] = {
            "form": form,
            "lemma": lemma,
            "upos": upos,
            "feats": feat_map,
            "head": head,
            "deprel": deprel,
        }
    return out


def union_find_clusters(n: int, linked_pairs) -> list[frozenset[int]]:
    """Union-find over explicit pairwise decisions; components as index sets."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in linked_pairs:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    groups: dict[int, set[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), set()).add(i)
    return [frozenset(groups[root]) for root in sorted(groups)]
