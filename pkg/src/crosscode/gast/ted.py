"""Ordered tree edit distance (Zhang-Shasha) with unit costs.

Insertion, deletion and relabeling each cost 1. The distance is a metric on
ordered labeled trees; labels here are GAST kinds. Complexity is
O(|A| * |B| * min(depth, leaves)^2), comfortably fast at snippet scale.
"""

from __future__ import annotations

from .nodes import GastNode


class _Annotated:
    """Postorder arrays: kinds, leftmost-leaf-descendant index, keyroots."""

    __slots__ = ("kinds", "lml", "keyroots")

    def __init__(self, root: GastNode):
        kinds: list[str] = []
        lml: list[int] = []

        def walk(n: GastNode) -> int:
            first: int | None = None
            for i, child in enumerate(n.children):
                child_lml = walk(child)
                if i == 0:
                    first = child_lml
            idx = len(kinds)
            kinds.append(n.kind)
            lml.append(first if first is not None else idx)
            return lml[idx]

        walk(root)
        self.kinds = kinds
        self.lml = lml
        # Keyroots: the highest postorder node for each leftmost leaf.
        last_per_lml: dict[int, int] = {}
        for i, leaf in enumerate(lml):
            last_per_lml[leaf] = i
        self.keyroots = sorted(last_per_lml.values())


def tree_edit_distance(a: GastNode, b: GastNode) -> int:
    """Minimum number of unit edits turning tree ``a`` into tree ``b``."""
    ta, tb = _Annotated(a), _Annotated(b)
    na, nb = len(ta.kinds), len(tb.kinds)
    td = [[0] * nb for _ in range(na)]
    kinds_a, kinds_b = ta.kinds, tb.kinds
    lml_a, lml_b = ta.lml, tb.lml

    for i in ta.keyroots:
        for j in tb.keyroots:
            # Forest distance over postorder windows [lml(i)..i] x [lml(j)..j].
            ioff = lml_a[i] - 1
            joff = lml_b[j] - 1
            m = i - ioff + 1
            n = j - joff + 1
            fd = [[0] * n for _ in range(m)]
            for x in range(1, m):
                fd[x][0] = fd[x - 1][0] + 1
            row0 = fd[0]
            for y in range(1, n):
                row0[y] = row0[y - 1] + 1
            for x in range(1, m):
                fx = fd[x]
                fprev = fd[x - 1]
                ax = x + ioff
                a_is_tree = lml_a[ax] == lml_a[i]
                ka = kinds_a[ax]
                for y in range(1, n):
                    by = y + joff
                    if a_is_tree and lml_b[by] == lml_b[j]:
                        cost = 0 if ka == kinds_b[by] else 1
                        best = fprev[y - 1] + cost
                        if fprev[y] + 1 < best:
                            best = fprev[y] + 1
                        if fx[y - 1] + 1 < best:
                            best = fx[y - 1] + 1
                        fx[y] = best
                        td[ax][by] = best
                    else:
                        p = lml_a[ax] - 1 - ioff
                        q = lml_b[by] - 1 - joff
                        best = fd[p][q] + td[ax][by]
                        if fprev[y] + 1 < best:
                            best = fprev[y] + 1
                        if fx[y - 1] + 1 < best:
                            best = fx[y - 1] + 1
                        fx[y] = best
    return td[na - 1][nb - 1]
