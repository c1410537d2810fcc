"""Slow but obviously-correct reference implementations.

Tests compare the package's algorithms against these instead of against
hand-picked constants wherever a value is derived rather than published.
Nothing here imports from the algorithm modules under test.
"""

from __future__ import annotations

import random
from typing import Callable, Sequence


class PlainTree:
    """Minimal stand-in for any node type with ``kind`` and ``children``."""

    __slots__ = ("kind", "children")

    def __init__(self, kind: str, children: tuple = ()):
        self.kind = kind
        self.children = tuple(children)


def random_tree(
    rng: random.Random,
    size: int,
    kinds: Sequence[str],
    make: Callable = PlainTree,
):
    """Uniformly messy rooted ordered tree with exactly ``size`` nodes."""
    kind = rng.choice(kinds)
    if size <= 1:
        return make(kind, ())
    remaining = size - 1
    child_sizes = []
    while remaining:
        take = rng.randint(1, remaining)
        child_sizes.append(take)
        remaining -= take
    return make(kind, tuple(random_tree(rng, s, kinds, make) for s in child_sizes))


# --- tree edit distance ------------------------------------------------------------
#
# Minimum cost over all *valid mappings* between the two trees: mappings are
# one-to-one, preserve left-to-right (postorder) order, and preserve the
# ancestor relation. Unit costs: 1 per unmapped node on either side, 1 per
# mapped pair with different labels. This is the textbook definition the
# dynamic-programming algorithm is supposed to compute, evaluated by
# exhaustive search, so it is only usable for small trees.


def annotate_postorder(tree) -> tuple[list[str], list[int]]:
    """(labels, leftmost-leaf index) per node, in postorder."""
    labels: list[str] = []
    lml: list[int] = []

    def walk(node) -> int:
        child_lml = [walk(child) for child in node.children]
        index = len(labels)
        labels.append(node.kind)
        lml.append(child_lml[0] if child_lml else index)
        return lml[index]

    walk(tree)
    return labels, lml


def ted_reference(a, b) -> int:
    labels1, lml1 = annotate_postorder(a)
    labels2, lml2 = annotate_postorder(b)
    n1, n2 = len(labels1), len(labels2)
    best = [n1 + n2]

    def is_ancestor(lml: list[int], anc: int, desc: int) -> bool:
        return lml[anc] <= desc < anc

    def extend(i: int, j_min: int, pairs: list[tuple[int, int]], renames: int) -> None:
        mapped = len(pairs)
        free = min(n1 - i, n2 - j_min)
        lower = renames + (n1 - mapped - free) + (n2 - mapped - free)
        if lower >= best[0]:
            return
        if i == n1:
            best[0] = renames + (n1 - mapped) + (n2 - mapped)
            return
        extend(i + 1, j_min, pairs, renames)  # leave node i unmapped
        for j in range(j_min, n2):
            ok = all(
                is_ancestor(lml1, i, pi) == is_ancestor(lml2, j, pj) for pi, pj in pairs
            )
            if ok:
                pairs.append((i, j))
                extend(i + 1, j + 1, pairs, renames + (labels1[i] != labels2[j]))
                pairs.pop()

    extend(0, 0, [], 0)
    return best[0]


# --- pareto fronts -----------------------------------------------------------------


def dominates_vector(u: tuple[float, ...], v: tuple[float, ...]) -> bool:
    """u dominates v when no coordinate is worse and one is strictly better
    (coordinates are distances: smaller is better)."""
    return all(a <= b for a, b in zip(u, v)) and any(a < b for a, b in zip(u, v))


def fronts_reference(vectors: list[tuple[float, ...]]) -> list[list[int]]:
    """Partition indices into fronts by repeatedly removing the non-dominated."""
    remaining = set(range(len(vectors)))
    fronts: list[list[int]] = []
    while remaining:
        front = sorted(
            i
            for i in remaining
            if not any(dominates_vector(vectors[j], vectors[i]) for j in remaining if j != i)
        )
        fronts.append(front)
        remaining -= set(front)
    return fronts


# --- retrieval metrics -------------------------------------------------------------


def retrieval_reference(
    runs: list[tuple[tuple[str, ...], frozenset[str]]], ks: list[int]
) -> dict:
    """MRR / P@k / SR@k computed the long way from (ranking, relevant) pairs."""
    n = len(runs)
    mrr = 0.0
    p = {k: 0.0 for k in ks}
    sr = {k: 0.0 for k in ks}
    for ranked, relevant in runs:
        first_hit = None
        for position, sid in enumerate(ranked, start=1):
            if sid in relevant:
                first_hit = position
                break
        if first_hit is not None:
            mrr += 1.0 / first_hit
        for k in ks:
            p[k] += sum(1 for sid in ranked[:k] if sid in relevant) / k
            if first_hit is not None and first_hit <= k:
                sr[k] += 1.0
    return {
        "mrr": mrr / n,
        "p": {k: p[k] / n for k in ks},
        "sr": {k: sr[k] / n for k in ks},
    }
