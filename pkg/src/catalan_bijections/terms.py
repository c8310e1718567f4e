"""Construction terms and the four size-increasing constructors.

Every shape of size n in ``T``, ``S`` or ``A`` is built in exactly one way
from the size-0 shape by the constructors

* ``m``: new middle-child root / left column with a bottom square /
  arc from the new point to the farthest point,
* ``r``: new right-child root / full left column / arc to the nearest point,
* ``l``: new left-child root / full top row / arc to the second
  visible point,
* ``f``: fork of two shapes around a corner rectangle.

A :class:`Term` records that construction and is the shared currency of
the recursive bijection.

Argument order of ``f``: the term ``f(x, y)`` takes ``y`` as the
*restricted* input (the left subtree, the tiling placed below the corner
rectangle, the left arc tree) and ``x`` as the free one.  :func:`step` and
:func:`decompose` list fork inputs the other way round, restricted first.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .model import (
    LEAF,
    ArcTree,
    DomainError,
    Family,
    InvalidShape,
    Node,
    Rect,
    StaircaseTiling,
    empty,
    ensure_valid,
    size,
)

OPS = ("m", "r", "l", "f")
_ORDER = {"E": 0, "m": 1, "r": 2, "l": 3, "f": 4}


@dataclass(frozen=True, slots=True)
class Term:
    op: str
    args: tuple[Term, ...] = ()
    size: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "size", sum(a.size for a in self.args) + (self.op != "E"))

    def __str__(self) -> str:
        if self.op == "E":
            return "E"
        return f"{self.op}({','.join(map(str, self.args))})"

    def sort_key(self):
        return (_ORDER[self.op],) + tuple(a.sort_key() for a in self.args)


E = Term("E")


def m(t: Term) -> Term:
    return Term("m", (t,))


def r(t: Term) -> Term:
    return Term("r", (t,))


def l(t: Term) -> Term:  # noqa: E743
    return Term("l", (t,))


def f(free: Term, restricted: Term) -> Term:
    return Term("f", (free, restricted))


def term_violations(t: Term, path: str = "") -> list[str]:
    """Domain violations anywhere inside ``t`` (empty means well-formed)."""
    where = path or "top"
    out = []
    if t.op not in _ORDER:
        return [f"{where}: unknown constructor {t.op!r}"]
    arity = 2 if t.op == "f" else (0 if t.op == "E" else 1)
    if len(t.args) != arity:
        return [f"{where}: {t.op} takes {arity} argument(s), got {len(t.args)}"]
    if t.op == "r" and t.args[0].size < 1:
        out.append(f"{where}: r needs an argument of size >= 1")
    if t.op == "l":
        out.extend(_restricted(t.args[0], where, "l"))
    if t.op == "f":
        free, restricted = t.args
        out.extend(_restricted(restricted, where, "f"))
        if free.size < 1:
            out.append(f"{where}: f needs a free argument of size >= 1")
    for i, a in enumerate(t.args):
        out.extend(term_violations(a, f"{path}{t.op}{i}."))
    return out


def _restricted(arg: Term, where: str, op: str) -> list[str]:
    out = []
    if arg.op == "m":
        out.append(f"{where}: {op} applied to an m-term")
    if arg.size < 2:
        out.append(f"{where}: {op} applied to a term of size {arg.size} < 2")
    return out


def ensure_term(t: Term) -> None:
    problems = term_violations(t)
    if problems:
        raise DomainError(problems)


# ----------------------------------------------------------------- steps


def _tiling_m(s: StaircaseTiling) -> StaircaseTiling:
    n = s.n
    rects = [
        Rect(rect.r1, 1 if rect.c1 == 1 else rect.c1 + 1, rect.r2, rect.c2 + 1)
        for rect in s.rects
    ]
    rects.append(Rect(n + 1, 1, n + 1, 1))
    return StaircaseTiling._trusted(n + 1, tuple(rects))


def _tiling_r(s: StaircaseTiling) -> StaircaseTiling:
    n = s.n
    return StaircaseTiling._trusted(n + 1, s.shifted(0, 1) + (Rect(1, 1, n + 1, 1),))


def _tiling_l(s: StaircaseTiling) -> StaircaseTiling:
    n = s.n
    return StaircaseTiling._trusted(n + 1, (Rect(1, 1, 1, n + 1),) + s.shifted(1, 0))


def _tiling_f(below: StaircaseTiling, beside: StaircaseTiling) -> StaircaseTiling:
    n1, n2 = below.n, beside.n
    corner = Rect(1, 1, n2 + 1, n1 + 1)
    # kept in diagonal order: beside ends in rows 1..n2, corner in n2+1, below after
    rects = beside.shifted(0, n1 + 1) + (corner,) + below.shifted(n2 + 1, 0)
    return StaircaseTiling._trusted(n1 + n2 + 1, rects)


def _arcs_m(a: ArcTree) -> ArcTree:
    return ArcTree((a.n + 1,) + tuple(q + 1 for q in a.rend))


def _arcs_r(a: ArcTree) -> ArcTree:
    return ArcTree((1,) + tuple(q + 1 for q in a.rend))


def _arcs_l(a: ArcTree) -> ArcTree:
    # the second visible point from the new leftmost point is where the
    # old leftmost point's arc lands
    shifted = tuple(q + 1 for q in a.rend)
    return ArcTree((shifted[0],) + shifted)


def _arcs_f(left: ArcTree, right: ArcTree) -> ArcTree:
    n1 = left.n
    return ArcTree(
        (n1 + 1,) + tuple(q + 1 for q in left.rend) + tuple(q + n1 + 1 for q in right.rend)
    )


_STEPS = {
    Family.T: {
        "m": lambda t: Node(mid=t) if t is not None else LEAF,
        "r": lambda t: Node(right=t),
        "l": lambda t: Node(left=t),
        "f": lambda a, b: Node(left=a, right=b),
    },
    Family.S: {"m": _tiling_m, "r": _tiling_r, "l": _tiling_l, "f": _tiling_f},
    Family.A: {"m": _arcs_m, "r": _arcs_r, "l": _arcs_l, "f": _arcs_f},
}


def _is_m_image(family: Family, shape) -> bool:
    if family is Family.T:
        return shape is not None and shape.left is None and shape.right is None
    if family is Family.S:
        n = shape.n
        return n >= 1 and shape.rects[-1] == Rect(n, 1, n, 1)
    return shape.n >= 1 and shape.rend[0] == shape.n


def step(family, op: str, inputs: Sequence, check: bool = True):
    """Apply constructor ``op`` to ``inputs`` within ``family``.

    ``inputs`` is one shape, or for ``"f"`` the pair (restricted, free).
    """
    family = Family(family)
    op = op.lower()
    if op not in OPS:
        raise ValueError(f"unknown constructor {op!r}")
    inputs = tuple(inputs)
    if len(inputs) != (2 if op == "f" else 1):
        raise DomainError([f"{op} takes {2 if op == 'f' else 1} input(s), got {len(inputs)}"])
    if check:
        for shape in inputs:
            ensure_valid(family, shape)
        sizes = [size(family, shape) for shape in inputs]
        problems = []
        if op == "r" and sizes[0] < 1:
            problems.append("r needs an input of size >= 1")
        if op in ("l", "f"):
            if sizes[0] < 2:
                problems.append(f"{op} needs a first input of size >= 2")
            elif _is_m_image(family, inputs[0]):
                problems.append(f"{op} input is an m-image")
        if op == "f" and sizes[1] < 1:
            problems.append("f needs a second input of size >= 1")
        if problems:
            raise DomainError(problems)
    return _STEPS[family][op](*inputs)


# ---------------------------------------------------------- decomposition


def _decompose_tree(t: Node):
    kind = t.kind
    if kind == ".":
        return "m", (None,)
    if kind == "M":
        return "m", (t.mid,)
    if kind == "R":
        return "r", (t.right,)
    if kind == "L":
        return "l", (t.left,)
    return "f", (t.left, t.right)


def _decompose_tiling(s: StaircaseTiling):
    n = s.n
    rects = s.rects
    if rects[-1] == Rect(n, 1, n, 1):
        inner = []
        for rect in rects[:-1]:
            if rect.c1 == 1:
                if rect.width < 2:
                    raise InvalidShape([f"left-edge rect {tuple(rect)} too narrow to shrink"])
                inner.append(Rect(rect.r1, 1, rect.r2, rect.c2 - 1))
            else:
                inner.append(rect.shifted(0, -1))
        return "m", (StaircaseTiling._trusted(n - 1, tuple(inner)),)
    corner = s.rect_at(1, 1)
    if corner.width == 1:
        rest = tuple(x.shifted(0, -1) for x in rects if x != corner)
        return "r", (StaircaseTiling._trusted(n - 1, rest),)
    if corner.height == 1:
        rest = tuple(x.shifted(-1, 0) for x in rects if x != corner)
        return "l", (StaircaseTiling._trusted(n - 1, rest),)
    n1, n2 = corner.width - 1, corner.height - 1
    # a valid tiling cannot cross the corner's right or bottom edge
    return "f", (s._block(n2 + 2, 1, n1), s._block(1, n1 + 2, n2))


def _decompose_arcs(a: ArcTree):
    n = a.n
    rend = a.rend
    if rend[0] == n:
        return "m", (ArcTree(tuple(q - 1 for q in rend[1:])),)
    if rend[0] == 1:
        return "r", (ArcTree(tuple(q - 1 for q in rend[1:])),)
    if rend[0] == rend[1]:
        return "l", (ArcTree(tuple(q - 1 for q in rend[1:])),)
    j = rend[0]
    left = ArcTree(tuple(q - 1 for q in rend[1:j]))
    right = ArcTree(tuple(q - j for q in rend[j:]))
    return "f", (left, right)


_EMPTY = {fam: empty(fam) for fam in (Family.T, Family.S, Family.A)}

_DECOMPOSERS = {
    Family.T: _decompose_tree,
    Family.S: _decompose_tiling,
    Family.A: _decompose_arcs,
}


def decompose(family, shape, check: bool = True):
    """Return ``(op, inputs)`` with ``step(family, op, inputs) == shape``."""
    family = Family(family)
    if check:
        ensure_valid(family, shape)
    if size(family, shape) < 1:
        raise InvalidShape(["cannot decompose the empty shape"])
    return _DECOMPOSERS[family](shape)


# ------------------------------------------------------------ term <-> shape


def term_of(family, shape) -> Term:
    """The unique construction term that builds ``shape``."""
    family = Family(family)
    ensure_valid(family, shape)
    return _term_of(family, shape)


_IS_EMPTY = {
    Family.T: lambda t: t is None,
    Family.S: lambda s: s.n == 0,
    Family.A: lambda a: not a.rend,
}


def _term_of(family: Family, shape) -> Term:
    if _IS_EMPTY[family](shape):
        return E
    op, parts = _DECOMPOSERS[family](shape)
    if op == "f":
        restricted, free = parts
        return f(_term_of(family, free), _term_of(family, restricted))
    return Term(op, (_term_of(family, parts[0]),))


def evaluate(family, term: Term, check: bool = True):
    """Build the shape described by ``term`` in ``family``."""
    family = Family(family)
    if check:
        ensure_term(term)
    return _evaluate(family, term)


def _evaluate(family: Family, term: Term):
    if term.op == "E":
        return _EMPTY[family]
    if term.op == "f":
        free, restricted = term.args
        return _STEPS[family]["f"](_evaluate(family, restricted), _evaluate(family, free))
    return _STEPS[family][term.op](_evaluate(family, term.args[0]))


# ------------------------------------------------------------ enumeration


@lru_cache(maxsize=None)
def _terms(n: int) -> tuple[Term, ...]:
    if n == 0:
        return (E,)
    out = [m(t) for t in _terms(n - 1)]
    if n - 1 >= 1:
        out += [r(t) for t in _terms(n - 1)]
        out += [l(t) for t in _terms(n - 1) if t.op != "m"]
    forks = [
        f(free, restricted)
        for k in range(2, n - 1)
        for restricted in _terms(k)
        if restricted.op != "m"
        for free in _terms(n - 1 - k)
    ]
    forks.sort(key=Term.sort_key)
    return tuple(out + forks)


def enum_terms(n: int) -> Iterator[Term]:
    """All construction terms of size ``n`` in lexicographic order (E<m<r<l<f)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return iter(_terms(n))


def count_terms(n: int) -> int:
    return len(_terms(n))


def enumerate_family(family, n: int) -> Iterator:
    """Every size-``n`` shape of ``family``, in term order.

    Smaller sizes are built level by level so each shape costs one step.
    """
    family = Family(family)
    steps = _STEPS[family]
    built: dict[int, object] = {id(E): empty(family)}

    def one(t: Term):
        if t.op == "f":
            free, restricted = t.args
            return steps["f"](built[id(restricted)], built[id(free)])
        return steps[t.op](built[id(t.args[0])])

    for k in range(1, n):
        for t in _terms(k):
            built[id(t)] = one(t)
    if n == 0:
        yield empty(family)
        return
    for t in _terms(n):
        yield one(t)
