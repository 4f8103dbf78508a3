"""Trees as finite prefix codes, forests, grafting, and common refinements."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pythrep.forests import (
    Forest,
    Tree,
    as_forest,
    common_refinement,
    compose,
    random_tree,
    tensor,
)

seeds_st = st.integers(0, 10**6)


def _tree(seed, **kw):
    return random_tree(np.random.default_rng(seed), **kw)


# ----------------------------------------------------------------- basics


def test_constructors_frozen():
    assert Tree.leaf().leaves == ("",)
    assert Tree.caret().leaves == ("0", "1")
    assert Tree.vine_left(1).leaves == ("0", "10", "11")
    assert Tree.vine_right(1).leaves == ("00", "01", "1")
    assert Tree.vine_left(2).leaves == ("0", "10", "110", "111")
    assert Tree.complete(2).leaves == ("00", "01", "10", "11")
    assert Tree.spine("01").leaves == ("00", "01", "1")


def test_invalid_leaf_sets_raise():
    for bad in (("0",), ("0", "10"), ("0", "1", "1"), ("0", "01", "1")):
        with pytest.raises(ValueError):
            Tree(bad)
    with pytest.raises(ValueError):
        Tree(())


def test_text_forms_frozen():
    assert Tree.leaf().to_text() == "*"
    assert Tree.vine_left(1).to_text() == "(*(**))"
    assert Tree.vine_right(1).to_text() == "((**)*)"
    assert Tree.from_text("((**)(**))") == Tree.complete(2)
    with pytest.raises(ValueError):
        Tree.from_text("(*)")
    with pytest.raises(ValueError):
        Tree.from_text("(**")


@given(seeds_st)
def test_text_roundtrip(seed):
    t = _tree(seed)
    assert Tree.from_text(t.to_text()) == t


def test_depth_and_counts():
    assert Tree.leaf().depth == 0
    assert Tree.complete(3).depth == 3
    assert Tree.complete(3).n_leaves == 8
    assert Tree.spine("110").n_leaves == 4
    assert Tree.vine_left(5).depth == 6


@given(seeds_st, st.integers(1, 16))
def test_random_tree_leaf_count(seed, n):
    t = random_tree(np.random.default_rng(seed), n_leaves=n)
    assert t.n_leaves == n


@given(seeds_st, st.integers(1, 5))
def test_random_tree_depth_budget(seed, d):
    assert random_tree(np.random.default_rng(seed), max_depth=d).depth <= d


# ------------------------------------------------------- grafting, subtrees


def test_subtree_frozen():
    assert Tree.complete(2).subtree("0") == Tree.caret()
    assert Tree.vine_left(2).subtree("1") == Tree.vine_left(1)
    assert Tree.leaf().subtree("") == Tree.leaf()
    with pytest.raises(ValueError):
        Tree.caret().subtree("00")


def test_grafted():
    t = Tree.caret().grafted({"0": Tree.caret()})
    assert t.leaves == ("00", "01", "1")
    assert Tree.leaf().grafted({"": Tree.vine_left(2)}) == Tree.vine_left(2)
    with pytest.raises(ValueError):
        Tree.caret().grafted({"00": Tree.caret()})


@given(seeds_st)
def test_graft_then_subtree_roundtrip(seed):
    rng = np.random.default_rng(seed)
    base = random_tree(rng, max_depth=3)
    pieces = {v: random_tree(rng, max_depth=3) for v in base.leaves}
    grown = base.grafted(pieces)
    for v, piece in pieces.items():
        assert grown.subtree(v) == piece


# ---------------------------------------------------------------- forests


def test_forest_shapes():
    f = Forest.trivial(3)
    assert f.n_roots == 3 and f.n_leaves == 3
    e = Forest.elementary(2, 4)
    assert e.n_roots == 4 and e.n_leaves == 5
    assert e.trees[1] == Tree.caret()
    assert all(t.is_leaf for i, t in enumerate(e.trees) if i != 1)
    with pytest.raises(ValueError):
        Forest.elementary(0, 4)
    with pytest.raises(ValueError):
        Forest(())


def test_tensor_and_as_forest():
    f = tensor(Tree.caret(), Tree.leaf())
    assert f.n_roots == 2 and f.n_leaves == 3
    assert as_forest(Tree.caret()).n_roots == 1
    assert as_forest(f) is f


def test_compose_onto_leaves():
    top = as_forest(Tree.caret())
    bottom = tensor(Tree.caret(), Tree.leaf())
    assert compose(top, bottom).trees[0].leaves == ("00", "01", "1")
    with pytest.raises(ValueError):
        compose(top, Forest.trivial(3))


@given(seeds_st)
def test_compose_with_trivial_is_identity(seed):
    t = _tree(seed)
    assert t.composed(Forest.trivial(t.n_leaves)) == t


def test_elementary_forests_multiply_left_to_right():
    # growing leaf 1 of a caret, then leaf 2 of the result
    t = Tree.caret().composed(Forest.elementary(1, 2)).composed(
        Forest.elementary(2, 3)
    )
    assert t.leaves == ("00", "010", "011", "1")


# ------------------------------------------------------- common refinement


def test_refinement_frozen():
    w, f, h = common_refinement(Tree.vine_left(1), Tree.vine_right(1))
    assert w.leaves == ("00", "01", "10", "11")
    assert Tree.vine_left(1).composed(f) == w
    assert Tree.vine_right(1).composed(h) == w


@settings(max_examples=60)
@given(seeds_st)
def test_refinement_properties(seed):
    rng = np.random.default_rng(seed)
    t = random_tree(rng, max_depth=4)
    s = random_tree(rng, max_depth=4)
    w, f, h = common_refinement(t, s)
    assert t.composed(f) == w
    assert s.composed(h) == w
    assert f.n_roots == t.n_leaves
    assert h.n_roots == s.n_leaves


@given(seeds_st)
def test_refinement_with_self_is_trivial(seed):
    t = _tree(seed)
    w, f, h = common_refinement(t, t)
    assert w == t and f == Forest.trivial(t.n_leaves) and f == h


@settings(max_examples=30)
@given(seeds_st)
def test_refinement_is_minimal(seed):
    # every leaf of the refinement must come from one side or the other;
    # anything strictly coarser would fail to contain both leaf sets
    rng = np.random.default_rng(seed)
    t = random_tree(rng, max_depth=4)
    s = random_tree(rng, max_depth=4)
    w, _, _ = common_refinement(t, s)
    assert set(w.leaves) <= set(t.leaves) | set(s.leaves)
