import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catalan_bijections.alpha import alpha
from catalan_bijections.beta import beta, beta_inv, beta_with_map, check_beta_rules
from catalan_bijections.model import LEAF, Family, InvariantError, Node, StaircaseTiling, validate
from catalan_bijections.terms import enumerate_family, evaluate
from catalan_bijections.verify import random_term

from helpers import mid_chain, right_chain, tiling

trees = st.builds(random_term, st.integers(0, 18), st.randoms(use_true_random=False)).map(
    lambda t: evaluate("T", t)
)

CASES = [
    (mid_chain(3), tiling((1, 1, 1, 3), (2, 1, 2, 2), (3, 1, 3, 1))),
    (right_chain(3), tiling((1, 1, 3, 1), (1, 2, 2, 2), (1, 3, 1, 3))),
    (Node(left=Node(right=LEAF)), tiling((1, 1, 2, 2), (1, 3, 1, 3), (3, 1, 3, 1))),
    (Node(left=Node(right=LEAF), right=LEAF), tiling((1, 1, 3, 2), (1, 3, 1, 4), (2, 3, 2, 3), (4, 1, 4, 1))),
]


@pytest.mark.parametrize("tree, image", CASES)
def test_examples_both_ways(tree, image):
    assert beta(tree) == image
    assert beta_inv(image) == tree


def test_small_cases():
    assert beta(None) == StaircaseTiling(0, ())
    assert beta(LEAF) == tiling((1, 1, 1, 1))


def test_map_pairs_every_node_with_its_rectangle():
    s, placed = beta_with_map(CASES[3][0])
    assert set(placed.values()) == set(s.rects)
    assert placed["root.L"] == (1, 1, 3, 2)


def test_chain_rules_on_examples():
    assert check_beta_rules(mid_chain(3)) == []
    assert check_beta_rules(right_chain(3)) == []


def test_rules_report_a_wrong_pairing():
    assert check_beta_rules(mid_chain(3), tiling((1, 1, 3, 1), (1, 2, 2, 2), (1, 3, 1, 3)))


def test_rejects_invalid_tree():
    with pytest.raises(InvariantError):
        beta(Node(left=LEAF))


def test_three_agree_two_swap_at_size_three():
    trees_3 = list(enumerate_family("T", 3))
    differ = [t for t in trees_3 if alpha("T", "S", t) != beta(t)]
    assert len(differ) == 2
    a, b = differ
    assert alpha("T", "S", a) == beta(b) and alpha("T", "S", b) == beta(a)


@settings(max_examples=200, deadline=None)
@given(trees)
def test_inverse_on_larger_trees(t):
    s = beta(t)
    assert validate(Family.S, s) == []
    assert beta_inv(s) == t
    assert check_beta_rules(t) == []
