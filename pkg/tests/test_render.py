import re

import pytest

from catalan_bijections.codec import parse_literal
from catalan_bijections.render import render
from catalan_bijections.terms import E, evaluate, m

SAMPLES = {
    "T": "B(R(*),*)",
    "S": "S4[1,1,2,3;1,4,1,4;3,2,3,2;3,1,4,1]",
    "A": "A3[2,2,3]",
    "B": "((.,.),.)",
    "P": "(()(()))",
}


def test_unit_square_box():
    assert render("S", parse_literal("S", "S1[1,1,1,1]"), "ascii") == "+---+\n|   |\n+---+"


def test_stacked_rows():
    text = render("S", evaluate("S", m(m(m(E)))), "ascii")
    rows = [line for line in text.splitlines() if line.startswith("|")]
    assert [line.count(" ") for line in rows] == [11, 7, 3]


def test_adjacent_arcs():
    lines = render("A", parse_literal("A", "A3[1,2,3]"), "ascii").splitlines()
    assert lines[-1] == "o   o   o   o"
    assert lines[0].split() == ["+-+"] * 3


def test_tree_tags():
    text = render("T", parse_literal("T", SAMPLES["T"]), "ascii")
    assert "L o" in text and "R o" in text


@pytest.mark.parametrize("family", sorted(SAMPLES))
def test_svg_is_standalone_and_deterministic(family):
    value = parse_literal(family, SAMPLES[family])
    a, b = render(family, value, "svg"), render(family, value, "svg")
    assert a == b
    assert a.startswith("<svg xmlns=") and a.rstrip().endswith("</svg>")
    assert not re.search(r"\d\.\d", a)  # integer coordinates only


def test_unknown_mode():
    with pytest.raises(ValueError):
        render("S", parse_literal("S", "S0[]"), "png")
