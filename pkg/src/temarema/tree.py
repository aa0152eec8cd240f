"""Ordered dependency trees: construction, subtree queries, pruning.

Children are always kept in surface order (token id order), which CoNLL-U
guarantees to coincide with linear order.  Trees are immutable after
construction; ``prune`` and ``restricted`` return new trees.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .conllu import Sentence, Token
from .errors import TreeError


@dataclass(frozen=True)
class DepTree:
    sent_id: str
    nodes: dict[int, Token]
    root: int
    children: dict[int, tuple[int, ...]]

    def ids(self) -> list[int]:
        return sorted(self.nodes)

    def require(self, token_id: int) -> Token:
        try:
            return self.nodes[token_id]
        except KeyError:
            raise TreeError(f"sentence {self.sent_id}: unknown token id {token_id}")


def build_tree(sentence: Sentence) -> DepTree:
    """Build a tree, verifying single-rootedness and full reachability."""
    roots = [t.id for t in sentence.tokens if t.head == 0]
    if len(roots) != 1:
        raise TreeError(
            f"sentence {sentence.sent_id}: expected exactly one root, found {len(roots)}"
        )
    nodes = {t.id: t for t in sentence.tokens}
    for t in sentence.tokens:
        if t.head != 0 and t.head not in nodes:
            raise TreeError(
                f"sentence {sentence.sent_id}: token {t.id} has unknown head {t.head}"
            )
    children: dict[int, list[int]] = {i: [] for i in nodes}
    for t in sentence.tokens:
        if t.head != 0:
            children[t.head].append(t.id)
    root = roots[0]
    reached = {root}
    stack = [root]
    while stack:
        for c in children[stack.pop()]:
            if c not in reached:
                reached.add(c)
                stack.append(c)
    unreachable = set(nodes) - reached
    if unreachable:
        # Unreachable nodes are trapped in a head cycle; report the chain.
        start = min(unreachable)
        chain = [start]
        seen = {start}
        current = nodes[start].head
        while current not in seen and current != 0:
            chain.append(current)
            seen.add(current)
            current = nodes[current].head
        chain.append(current)
        raise TreeError(
            f"sentence {sentence.sent_id}: head cycle "
            + " -> ".join(str(i) for i in chain)
        )
    frozen = {h: tuple(sorted(c)) for h, c in children.items()}
    return DepTree(sentence.sent_id, nodes, root, frozen)


def subtree_tokens(tree: DepTree, node: int) -> list[int]:
    """Token ids of ``node`` and all its descendants, in surface order."""
    tree.require(node)
    out = []
    stack = [node]
    while stack:
        current = stack.pop()
        out.append(current)
        stack.extend(tree.children[current])
    return sorted(out)


def prune(tree: DepTree, node: int) -> DepTree:
    """Remove ``node`` and its whole subtree; pruning the root is an error."""
    tree.require(node)
    if node == tree.root:
        raise TreeError(f"sentence {tree.sent_id}: cannot prune the root")
    removed = set(subtree_tokens(tree, node))
    nodes = {i: t for i, t in tree.nodes.items() if i not in removed}
    children = {
        h: tuple(c for c in cs if c not in removed)
        for h, cs in tree.children.items()
        if h not in removed
    }
    return DepTree(tree.sent_id, nodes, tree.root, children)


def precedes(tree: DepTree, a: int, b: int) -> bool:
    """True iff ``a`` occurs before ``b`` in the surface string."""
    tree.require(a)
    tree.require(b)
    return a < b


def restricted(tree: DepTree, ids) -> DepTree:
    """Re-root the tree on a descendant-closed subset of its nodes.

    The subset must contain exactly one node whose head lies outside it;
    that node becomes the root of the result and is relabelled
    ``deprel=ROOT`` / ``head=0`` so grammars can match it uniformly.
    """
    keep = set(ids)
    if not keep:
        raise TreeError(f"sentence {tree.sent_id}: empty restriction")
    unknown = keep - set(tree.nodes)
    if unknown:
        raise TreeError(
            f"sentence {tree.sent_id}: restriction references unknown id {min(unknown)}"
        )
    heads_outside = [i for i in keep if tree.nodes[i].head not in keep]
    if len(heads_outside) != 1:
        raise TreeError(
            f"sentence {tree.sent_id}: restriction is not a single subtree "
            f"({len(heads_outside)} external heads)"
        )
    new_root = heads_outside[0]
    nodes = {}
    for i in sorted(keep):
        tok = tree.nodes[i]
        if i == new_root:
            tok = replace(tok, head=0, deprel="ROOT")
        nodes[i] = tok
    children: dict[int, list[int]] = {i: [] for i in keep}
    for i, tok in nodes.items():
        if tok.head != 0:
            children[tok.head].append(i)
    frozen = {h: tuple(sorted(c)) for h, c in children.items()}
    return DepTree(tree.sent_id, nodes, new_root, frozen)
