import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catalan_bijections import terms as T
from catalan_bijections.model import LEAF, ArcTree, DomainError, Family, Node, StaircaseTiling, validate
from catalan_bijections.terms import E, enum_terms, evaluate, f, l, m, r, step, term_of
from catalan_bijections.verify import catalan

from helpers import mid_chain, tiling

FAMS = (Family.T, Family.S, Family.A)
small_terms = st.integers(0, 8).flatmap(lambda n: st.sampled_from(T._terms(n)))


def test_step_m_on_empty_tiling():
    assert step("S", "m", [StaircaseTiling(0, ())]) == tiling((1, 1, 1, 1))


def test_step_m_on_unit_square():
    assert step("S", "m", [tiling((1, 1, 1, 1))]) == tiling((1, 1, 1, 2), (2, 1, 2, 1))


def test_step_l_on_arcs():
    assert step("A", "l", [ArcTree((1, 2))]) == ArcTree((2, 2, 3))


def test_step_fork_on_tilings():
    below = tiling((1, 1, 2, 1), (1, 2, 1, 2))
    beside = tiling((1, 1, 1, 1))
    got = step("S", "f", [below, beside])
    assert got == tiling((1, 1, 2, 3), (1, 4, 1, 4), (3, 1, 4, 1), (3, 2, 3, 2))


@pytest.mark.parametrize(
    "op, inputs",
    [
        ("r", [StaircaseTiling(0, ())]),
        ("l", [tiling((1, 1, 1, 1))]),
        ("l", [tiling((1, 1, 1, 2), (2, 1, 2, 1))]),  # an m-image
        ("f", [tiling((1, 1, 2, 1), (1, 2, 1, 2)), StaircaseTiling(0, ())]),
    ],
)
def test_step_outside_domain(op, inputs):
    with pytest.raises(DomainError):
        step("S", op, inputs)


def test_decompose_examples():
    assert T.decompose("S", tiling((1, 1, 1, 2), (2, 1, 2, 1))) == ("m", (tiling((1, 1, 1, 1)),))
    assert T.decompose("A", ArcTree((3, 2, 3))) == ("m", (ArcTree((1, 2)),))
    fork = Node(left=Node(right=LEAF), right=LEAF)
    assert T.decompose("T", fork) == ("f", (Node(right=LEAF), LEAF))


def test_term_of_examples():
    assert term_of("S", tiling((1, 1, 1, 1))) == m(E)
    assert term_of("A", ArcTree((2, 2, 3))) == l(r(m(E)))


def test_evaluate_examples():
    assert evaluate("T", m(m(m(E)))) == mid_chain(3)
    assert evaluate("S", l(r(m(E)))) == tiling((1, 1, 1, 3), (2, 1, 3, 1), (2, 2, 2, 2))
    assert evaluate("A", E) == ArcTree(())


def test_evaluate_rejects_bad_terms():
    with pytest.raises(DomainError):
        evaluate("S", m(l(E)))


def test_enumeration_order_and_contents():
    assert list(enum_terms(1)) == [m(E)]
    assert [str(t) for t in enum_terms(3)] == [
        "m(m(m(E)))", "m(r(m(E)))", "r(m(m(E)))", "r(r(m(E)))", "l(r(m(E)))",
    ]
    forks = [t for t in enum_terms(4) if t.op == "f"]
    assert forks == [f(m(E), r(m(E)))]


def test_enumeration_is_sorted():
    for n in range(8):
        ts = list(enum_terms(n))
        assert ts == sorted(ts, key=T.Term.sort_key)


@pytest.mark.parametrize("n", range(9))
def test_term_count_matches_catalan(n):
    assert T.count_terms(n) == catalan(n)


@pytest.mark.parametrize("fam", FAMS)
def test_enumerate_family_equals_evaluate(fam):
    for n in range(7):
        assert list(T.enumerate_family(fam, n)) == [evaluate(fam, t) for t in enum_terms(n)]


@settings(max_examples=200, deadline=None)
@given(small_terms, st.sampled_from(FAMS))
def test_term_round_trip(t, fam):
    shape = evaluate(fam, t)
    assert validate(fam, shape) == []
    assert term_of(fam, shape) == t
    assert T.size(fam, shape) == t.size


@settings(max_examples=200, deadline=None)
@given(small_terms.filter(lambda t: t.op != "E"), st.sampled_from(FAMS))
def test_step_inverts_decompose(t, fam):
    shape = evaluate(fam, t)
    op, parts = T.decompose(fam, shape)
    assert op == t.op
    assert step(fam, op, parts) == shape
