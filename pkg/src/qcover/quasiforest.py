"""Leaf structure of facet complexes: leaf orders, relation trees, subtrees.

A facet F is a *leaf* when a single other facet G absorbs every
intersection: H∩F ⊆ G∩F for every other facet H.  Such a G is a *branch*
of F.  A complex is a *quasi-forest* when its facets can be listed so that
each one is a leaf of the preceding prefix, and a connected quasi-forest is
a *quasi-tree*.

Quasi-forest recognition here is greedy: repeatedly detach some leaf of the
current subcomplex.  Greedy completeness is not assumed; the test suite
checks it against exhaustive permutation search on every small instance.

The *relation tree* records, for one leaf order and one branch choice per
detached leaf, which branch each facet was glued to.  Different orders and
branch rules give different trees; every one of them is a tree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

import numpy as np

from .complexes import ComplexLike, SmdSubcomplex, smd
from .errors import (
    InvalidLeafOrderError,
    NotAPermutationError,
    UnknownFacetIdError,
    UnknownNodeError,
)

BranchRule = Callable[[int, tuple[int, ...]], int]


def min_branch_rule(leaf: int, branches: tuple[int, ...]) -> int:
    """Deterministic default: the admissible branch with the smallest id."""
    return min(branches)


def max_branch_rule(leaf: int, branches: tuple[int, ...]) -> int:
    """The admissible branch with the largest id."""
    return max(branches)


def random_branch_rule(seed: int) -> BranchRule:
    """Seed-stable branch rule (PCG64); same seed, same choices."""
    rng = np.random.Generator(np.random.PCG64(seed))

    def rule(leaf: int, branches: tuple[int, ...]) -> int:
        return int(branches[rng.integers(0, len(branches))])

    return rule


# --- leaves and branches ------------------------------------------------------


def branches_of(cx: ComplexLike, fid: int) -> tuple[int, ...]:
    """All branches of the facet, ascending; empty when it is not a leaf.

    A single-facet complex returns the facet itself (leaf by convention).
    """
    fmask = cx.mask(fid)
    others = [g for g in cx.facet_ids if g != fid]
    if not others:
        return (fid,)
    union = 0
    for g in others:
        union |= cx.mask(g) & fmask
    return tuple(g for g in others if union & ~cx.mask(g) == 0)


def is_leaf(cx: ComplexLike, fid: int) -> bool:
    return bool(branches_of(cx, fid))


def find_leaf(cx: ComplexLike) -> Optional[tuple[int, tuple[int, ...]]]:
    """First leaf in canonical id order, with all of its branches.

    Returns None when the complex has no leaf at all (so it cannot be a
    quasi-forest).
    """
    for fid in cx.facet_ids:
        br = branches_of(cx, fid)
        if br:
            return fid, br
    return None


# --- leaf orders ---------------------------------------------------------------


def leaf_order(cx: ComplexLike) -> Optional[tuple[int, ...]]:
    """Greedy leaf order, or None when removal gets stuck.

    Repeatedly detaches the smallest-id leaf of the remaining subcomplex and
    returns the removal sequence reversed, so each facet is a leaf of the
    prefix that precedes it.
    """
    remaining = list(cx.facet_ids)
    removed: list[int] = []
    while len(remaining) > 1:
        view = smd(cx, remaining)
        hit = find_leaf(view)
        if hit is None:
            return None
        remaining.remove(hit[0])
        removed.append(hit[0])
    removed.append(remaining[0])
    return tuple(reversed(removed))


def validate_leaf_order(cx: ComplexLike, order: Iterable[int]) -> bool:
    """True iff each facet in the order is a leaf of the preceding prefix."""
    seq = list(order)
    if sorted(seq) != sorted(cx.facet_ids):
        raise NotAPermutationError(
            f"order {seq} is not a permutation of facet ids {list(cx.facet_ids)}"
        )
    for i in range(1, len(seq)):
        prefix = smd(cx, seq[: i + 1])
        if not is_leaf(prefix, seq[i]):
            return False
    return True


def is_quasi_forest(cx: ComplexLike) -> bool:
    return leaf_order(cx) is not None


def is_quasi_tree(cx: ComplexLike) -> bool:
    return cx.is_connected() and leaf_order(cx) is not None


# --- relation trees --------------------------------------------------------------


@dataclass(frozen=True)
class RelationTree:
    """Tree on facet ids with the chosen-branch map.

    ``branch`` points every non-root node to the branch it was glued to;
    the root points to itself.  ``edges`` are sorted (lo, hi) pairs.
    """

    nodes: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    branch: dict[int, int] = field(compare=False)
    root: int = 0

    def degree(self, fid: int) -> int:
        if fid not in self.branch:
            raise UnknownNodeError(f"facet id {fid} is not a tree node")
        return sum(1 for e in self.edges if fid in e)


def relation_tree(
    cx: ComplexLike,
    order: Iterable[int],
    branch_rule: BranchRule = min_branch_rule,
) -> RelationTree:
    """Build the relation tree for a leaf order and a branch rule.

    Walks the order backwards: detach the last facet, let ``branch_rule``
    pick one of its admissible branches in the current prefix, record the
    edge, repeat.  The first facet becomes the root with branch(root)=root.
    """
    seq = list(order)
    if not validate_leaf_order(cx, seq):
        raise InvalidLeafOrderError(f"{seq} is not a leaf order of the complex")
    branch: dict[int, int] = {seq[0]: seq[0]}
    edges: list[tuple[int, int]] = []
    for i in range(len(seq) - 1, 0, -1):
        prefix = smd(cx, seq[: i + 1])
        adm = branches_of(prefix, seq[i])
        chosen = branch_rule(seq[i], adm)
        if chosen not in adm:
            raise ValueError(
                f"branch rule chose {chosen}, admissible branches are {list(adm)}"
            )
        branch[seq[i]] = chosen
        edges.append((min(seq[i], chosen), max(seq[i], chosen)))
    return RelationTree(
        nodes=tuple(sorted(seq)),
        edges=tuple(sorted(edges)),
        branch=branch,
        root=seq[0],
    )


def is_branch_ancestor(tree: RelationTree, g: int, f: int) -> bool:
    """True when iterating the branch map from f reaches g (reflexively).

    This is the partial order induced by the tree: g precedes f when the
    chain f, branch(f), branch(branch(f)), ... passes through g.
    """
    for fid in (g, f):
        if fid not in tree.branch:
            raise UnknownNodeError(f"facet id {fid} is not a tree node")
    cur = f
    while True:
        if cur == g:
            return True
        nxt = tree.branch[cur]
        if nxt == cur:
            return False
        cur = nxt


def minimal_subtree(tree: RelationTree, targets: Iterable[int]) -> RelationTree:
    """Smallest subtree containing the targets (iterated leaf pruning).

    Degree-one nodes outside the target set are removed until none remain.
    The new root is the surviving node closest to the old root, i.e. the
    minimal survivor in the branch partial order.
    """
    tset = set(targets)
    if not tset:
        raise ValueError("target set must be nonempty")
    for fid in tset:
        if fid not in tree.branch:
            raise UnknownNodeError(f"facet id {fid} is not a tree node")
    nodes = set(tree.nodes)
    adj: dict[int, set[int]] = {v: set() for v in nodes}
    for a, b in tree.edges:
        adj[a].add(b)
        adj[b].add(a)
    changed = True
    while changed:
        changed = False
        for v in sorted(nodes):
            if v not in tset and len(adj[v]) <= 1 and len(nodes) > 1:
                for u in adj[v]:
                    adj[u].discard(v)
                nodes.discard(v)
                del adj[v]
                changed = True
    edges = tuple(sorted((a, b) for a, b in tree.edges if a in nodes and b in nodes))
    # the surviving node whose branch already left the subtree is the top one
    root = None
    branch: dict[int, int] = {}
    for v in sorted(nodes):
        b = tree.branch[v]
        if b == v or b not in nodes:
            root = v
            branch[v] = v
        else:
            branch[v] = b
    assert root is not None and len(edges) == len(nodes) - 1
    return RelationTree(
        nodes=tuple(sorted(nodes)), edges=edges, branch=branch, root=root
    )


# --- free vertices ---------------------------------------------------------------


def free_vertices(cx: ComplexLike, fid: int) -> frozenset[int]:
    """Vertices of the facet that belong to no other facet.

    Nonempty whenever the facet is a leaf: if every vertex of F also lay in
    another facet, the branch of F would contain all of F, breaking the
    antichain.
    """
    fmask = cx.mask(fid)
    for g in cx.facet_ids:
        if g != fid:
            fmask &= ~cx.mask(g)
    return frozenset(v for v in cx.facet(fid) if fmask >> (v - 1) & 1)


# --- export -----------------------------------------------------------------------


def relation_tree_dot(tree: RelationTree, cx: ComplexLike) -> str:
    """Byte-stable DOT rendering; each edge points from a facet to its branch."""
    lines = ["digraph relation_tree {"]
    for fid in tree.nodes:
        verts = ",".join(str(v) for v in sorted(cx.facet(fid)))
        lines.append(f'  F{fid} [label="F{fid}: {{{verts}}}"];')
    for fid in tree.nodes:
        if fid != tree.root:
            lines.append(f"  F{fid} -> F{tree.branch[fid]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
