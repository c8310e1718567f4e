import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catalan_bijections.classical import (
    arcs_to_planar,
    binary_to_tiling,
    induced,
    planar_to_arcs,
    tiling_to_binary,
    transport,
)
from catalan_bijections.model import ArcTree, BinaryTree, Family, PlanarTree
from catalan_bijections.verify import all_binary, all_planar

from helpers import tiling

LEAF_P = PlanarTree(())


def test_tiling_to_binary_examples():
    assert tiling_to_binary(tiling((1, 1, 1, 1))) == BinaryTree(None, None)
    assert tiling_to_binary(tiling((1, 1, 1, 2), (2, 1, 2, 1))) == BinaryTree(None, BinaryTree(None, None))


def test_arcs_to_planar_examples():
    assert arcs_to_planar(ArcTree(())) == LEAF_P
    assert arcs_to_planar(ArcTree((3, 3, 3))) == PlanarTree((LEAF_P, LEAF_P, LEAF_P))
    assert arcs_to_planar(ArcTree((2, 2, 3))) == PlanarTree((PlanarTree((LEAF_P, LEAF_P)),))


def test_induced_on_unique_size_one_objects():
    assert induced("B", "P", BinaryTree(None, None)) == PlanarTree((LEAF_P,))


def test_induced_only_accepts_binary_and_planar():
    with pytest.raises(ValueError):
        induced("S", "P", tiling((1, 1, 1, 1)))


def test_transport_passes_through_same_family():
    x = BinaryTree(None, None)
    assert transport("B", "B", x) is x


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 7).flatmap(lambda n: st.sampled_from(all_binary(n))))
def test_binary_round_trip(b):
    assert tiling_to_binary(binary_to_tiling(b)) == b


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 7).flatmap(lambda n: st.sampled_from(all_planar(n))))
def test_planar_round_trip(p):
    assert arcs_to_planar(planar_to_arcs(p)) == p
    assert induced("B", "P", induced("P", "B", p)) == p


@pytest.mark.parametrize("fam", [Family.T, Family.S, Family.A])
def test_transport_reaches_every_family(fam):
    b = BinaryTree(BinaryTree(None, None), None)
    x = transport("B", fam, b)
    assert transport(fam, "B", x) == b
