import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catalan_bijections.codec import TERM, LiteralSyntaxError, format_literal, parse_literal
from catalan_bijections.model import ArcTree, DomainError, Family, InvariantError, LEAF, Node
from catalan_bijections.terms import evaluate, r, m, E
from catalan_bijections.verify import WORKED_EXAMPLE, random_term

from helpers import tiling

terms_ = st.builds(random_term, st.integers(0, 20), st.randoms(use_true_random=False))


def test_worked_example_term_round_trips():
    assert format_literal(TERM, parse_literal(TERM, WORKED_EXAMPLE)) == WORKED_EXAMPLE


@pytest.mark.parametrize(
    "kind, value, text",
    [
        ("S", tiling((1, 1, 1, 1)), "S1[1,1,1,1]"),
        ("A", ArcTree((2, 2, 3)), "A3[2,2,3]"),
        ("S", tiling(), "S0[]"),
        ("A", ArcTree(()), "A0[]"),
        ("T", None, "~"),
        ("T", Node(left=Node(right=LEAF), right=LEAF), "B(R(*),*)"),
        ("B", None, "."),
        ("P", __import__("catalan_bijections").PlanarTree(()), "()"),
    ],
)
def test_canonical_text(kind, value, text):
    assert format_literal(kind, value) == text
    assert parse_literal(kind, text) == value


def test_parse_is_whitespace_tolerant_and_order_free():
    got = parse_literal("S", " S2[ 1,1,2,1 ; 1,2,1,2 ] ")
    assert got == evaluate("S", r(m(E)))


def test_invalid_value_raises_invariant_error():
    with pytest.raises(InvariantError):
        parse_literal("A", "A3[3,1,3]")


def test_term_outside_domain():
    with pytest.raises(DomainError):
        parse_literal(TERM, "m(l(E))")


@pytest.mark.parametrize(
    "kind, text, offset",
    [("T", "M(", 2), (TERM, "m(E", 3), ("S", "S1[1,1,1]", 8), ("A", "A2[1;2]", 4), (TERM, "E E", 2)],
)
def test_syntax_errors_carry_offsets(kind, text, offset):
    with pytest.raises(LiteralSyntaxError) as info:
        parse_literal(kind, text)
    assert info.value.offset == offset


def test_a_literal_with_wrong_count_is_invalid():
    with pytest.raises(InvariantError):
        parse_literal("A", "A2[1,2,3]")


@settings(max_examples=300, deadline=None)
@given(terms_, st.sampled_from([Family.T, Family.S, Family.A]))
def test_round_trip(t, fam):
    assert parse_literal(TERM, format_literal(TERM, t)) == t
    shape = evaluate(fam, t)
    assert parse_literal(fam, format_literal(fam, shape)) == shape
