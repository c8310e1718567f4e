"""One-line text literals for shapes and construction terms.

Grammars::

    term      E | m(term) | r(term) | l(term) | f(term,term)
    tree      ~ (empty) | * | M(tree) | R(tree) | L(tree) | B(tree,tree)
    tiling    S<n>[r1,c1,r2,c2;...]        e.g. S2[1,1,1,2;2,1,2,1], S0[]
    arcs      A<n>[rend0,rend1,...]        e.g. A3[2,2,3], A0[]
    binary    . | (binary,binary)
    planar    (child child ...)            leaf is ()

Whitespace between tokens is ignored.  ``B(x,y)`` lists the left subtree
first; ``f(x,y)`` lists the free input first and the restricted one second.
Parsing always validates: malformed text raises :class:`LiteralSyntaxError`,
well-formed text describing an invalid value raises :class:`InvariantError`.
"""
from __future__ import annotations

from .model import (
    LEAF,
    ArcTree,
    BinaryTree,
    CatalanError,
    Family,
    InvariantError,
    Node,
    PlanarTree,
    Rect,
    StaircaseTiling,
    ensure_valid,
)
from .terms import Term, ensure_term

TERM = "terms"


class LiteralSyntaxError(CatalanError, ValueError):
    """Malformed literal text; ``offset`` is the byte offset of the problem."""

    def __init__(self, message: str, text: str, pos: int):
        self.offset = len(text[:pos].encode("utf-8"))
        self.text = text
        super().__init__(f"{message} at byte {self.offset}")


# -------------------------------------------------------------- formatting


def format_tree(t) -> str:
    if t is None:
        return "~"
    kind = t.kind
    if kind == ".":
        return "*"
    if kind == "LR":
        return f"B({format_tree(t.left)},{format_tree(t.right)})"
    child = {"L": t.left, "M": t.mid, "R": t.right}.get(kind)
    if child is None:
        raise ValueError(f"cannot format node with children {kind}")
    return f"{kind}({format_tree(child)})"


def format_tiling(s: StaircaseTiling) -> str:
    body = ";".join(",".join(map(str, rect)) for rect in s.rects)
    return f"S{s.n}[{body}]"


def format_arcs(a: ArcTree) -> str:
    return f"A{a.n}[{','.join(map(str, a.rend))}]"


def format_binary(b) -> str:
    if b is None:
        return "."
    return f"({format_binary(b.left)},{format_binary(b.right)})"


def format_planar(p: PlanarTree) -> str:
    return "(" + " ".join(format_planar(c) for c in p.children) + ")"


_FORMATTERS = {
    Family.T: format_tree,
    Family.S: format_tiling,
    Family.A: format_arcs,
    Family.B: format_binary,
    Family.P: format_planar,
}


def format_literal(kind, value) -> str:
    """Canonical literal for ``value``; ``kind`` is a family tag or ``"terms"``."""
    if kind == TERM:
        return str(value)
    return _FORMATTERS[Family(kind)](value)


# ----------------------------------------------------------------- parsing


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message: str):
        raise LiteralSyntaxError(message, self.text, self.pos)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, expected: str) -> None:
        if self.peek() != expected:
            found = repr(self.peek()) if self.peek() else "end of input"
            self.fail(f"expected {expected!r}, found {found}")
        self.pos += 1

    def char(self) -> str:
        c = self.peek()
        if not c:
            self.fail("unexpected end of input")
        self.pos += 1
        return c

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected an integer")
        return int(self.text[start:self.pos])

    def end(self) -> None:
        if self.peek():
            self.fail(f"unexpected trailing {self.peek()!r}")


def _term(rd: _Reader) -> Term:
    c = rd.char()
    if c == "E":
        return Term("E")
    if c in "mrl":
        rd.take("(")
        inner = _term(rd)
        rd.take(")")
        return Term(c, (inner,))
    if c == "f":
        rd.take("(")
        a = _term(rd)
        rd.take(",")
        b = _term(rd)
        rd.take(")")
        return Term("f", (a, b))
    rd.pos -= 1
    rd.fail(f"unexpected {c!r} in term")


def _tree(rd: _Reader):
    c = rd.char()
    if c == "*":
        return LEAF
    if c in "MRL":
        rd.take("(")
        inner = _tree(rd)
        rd.take(")")
        if inner is None:
            rd.pos -= 1
            rd.fail("empty tree used as a child")
        return Node(**{{"M": "mid", "R": "right", "L": "left"}[c]: inner})
    if c == "B":
        rd.take("(")
        a = _tree(rd)
        rd.take(",")
        b = _tree(rd)
        rd.take(")")
        if a is None or b is None:
            rd.pos -= 1
            rd.fail("empty tree used as a child")
        return Node(left=a, right=b)
    if c == "~":
        return None
    rd.pos -= 1
    rd.fail(f"unexpected {c!r} in tree")


def _sized_list(rd: _Reader, tag: str, arity: int | None) -> tuple[int, list[list[int]]]:
    """Read ``<tag><n>[...]``; groups are split by ';' and must have ``arity`` items.

    ``arity=None`` means a single ','-separated group with no ';'.
    """
    rd.take(tag)
    n = rd.integer()
    rd.take("[")
    groups: list[list[int]] = []

    def close(group: list[int]) -> None:
        if arity is not None and len(group) != arity:
            rd.fail(f"rectangle needs {arity} coordinates, got {len(group)}")
        groups.append(group)

    if rd.peek() != "]":
        group = [rd.integer()]
        while True:
            c = rd.peek()
            if c == ",":
                rd.pos += 1
                group.append(rd.integer())
            elif c == ";" and arity is not None:
                close(group)
                rd.pos += 1
                group = [rd.integer()]
            else:
                break
        close(group)
    rd.take("]")
    return n, groups


def _tiling(rd: _Reader) -> StaircaseTiling:
    n, groups = _sized_list(rd, "S", 4)
    return StaircaseTiling(n, tuple(Rect(*g) for g in groups))


def _arcs(rd: _Reader) -> ArcTree:
    n, groups = _sized_list(rd, "A", None)
    rend = tuple(groups[0]) if groups else ()
    if len(rend) != n:
        raise InvariantError([f"declared size {n} but {len(rend)} endpoints given"])
    return ArcTree(rend)


def _binary(rd: _Reader):
    c = rd.char()
    if c == ".":
        return None
    if c == "(":
        a = _binary(rd)
        rd.take(",")
        b = _binary(rd)
        rd.take(")")
        return BinaryTree(a, b)
    rd.pos -= 1
    rd.fail(f"unexpected {c!r} in binary tree")


def _planar(rd: _Reader) -> PlanarTree:
    rd.take("(")
    children = []
    while rd.peek() == "(":
        children.append(_planar(rd))
    rd.take(")")
    return PlanarTree(tuple(children))


_PARSERS = {
    Family.T: _tree,
    Family.S: _tiling,
    Family.A: _arcs,
    Family.B: _binary,
    Family.P: _planar,
}


def parse_literal(kind, text: str):
    """Parse and validate a literal; ``kind`` is a family tag or ``"terms"``."""
    rd = _Reader(text)
    if kind == TERM:
        value = _term(rd)
        rd.end()
        ensure_term(value)
        return value
    family = Family(kind)
    value = _PARSERS[family](rd)
    rd.end()
    ensure_valid(family, value)
    return value
