import itertools
import random

import pytest

from crosscode.gast import GastNode, node, tree_edit_distance
from oracles import random_tree, ted_reference

# Published cross-language distances between the four worked-example snippets.
SMOKE = {
    ("get_evens.java", "all_odds.py"): 6,
    ("get_evens.java", "func.java"): 12,
    ("get_evens.java", "even_nums.py"): 9,
    ("all_odds.py", "func.java"): 14,
    ("all_odds.py", "even_nums.py"): 13,
    ("func.java", "even_nums.py"): 21,
}

KIND_POOL = ("var", "lit", "call")


@pytest.mark.parametrize("pair", sorted(SMOKE))
def test_worked_example_distances(fig1_bundle, pair):
    left, right = (fig1_bundle.asts.by_snippet[sid] for sid in pair)
    assert tree_edit_distance(left, right) == SMOKE[pair]


def test_identity_and_symmetry(fig1_bundle):
    trees = fig1_bundle.asts.by_snippet
    for tree in trees.values():
        assert tree_edit_distance(tree, tree) == 0
    for a, b in itertools.combinations(trees.values(), 2):
        assert tree_edit_distance(a, b) == tree_edit_distance(b, a)


def test_single_nodes():
    assert tree_edit_distance(node("var"), node("var")) == 0
    assert tree_edit_distance(node("var"), node("lit")) == 1


def test_pure_relabel_costs_label_diffs():
    a = node("call", node("var"), node("var"))
    b = node("call", node("lit"), node("var"))
    assert tree_edit_distance(a, b) == 1
    c = node("lit", node("lit"), node("lit"))
    assert tree_edit_distance(a, c) == 3


def test_insertion_only():
    small = node("block", node("var"))
    big = node("block", node("var"), node("lit"), node("call", node("var")))
    assert tree_edit_distance(small, big) == 3


def test_matches_exhaustive_reference():
    rng = random.Random(20_26)
    for _ in range(120):
        a = random_tree(rng, rng.randint(1, 6), KIND_POOL, make=GastNode)
        b = random_tree(rng, rng.randint(1, 6), KIND_POOL, make=GastNode)
        assert tree_edit_distance(a, b) == ted_reference(a, b), (a, b)


def test_metric_axioms_on_random_trees():
    rng = random.Random(97)
    trees = [random_tree(rng, rng.randint(1, 8), KIND_POOL, make=GastNode) for _ in range(30)]
    for a, b in itertools.combinations(trees[:12], 2):
        d = tree_edit_distance(a, b)
        assert 0 <= d <= a.size() + b.size()
        assert d == tree_edit_distance(b, a)
        assert (d == 0) == (a == b)
    for a, b, c in itertools.combinations(trees[:10], 3):
        assert tree_edit_distance(a, c) <= tree_edit_distance(a, b) + tree_edit_distance(b, c)
