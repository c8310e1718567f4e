"""Shape families counted by the Catalan numbers, and their validators.

Five families live here:

* ``T``: right-swept trees (:class:`Node`, empty tree is ``None``)
* ``S``: diagonal staircase tilings (:class:`StaircaseTiling`)
* ``A``: arc trees (:class:`ArcTree`)
* ``B``: binary trees (:class:`BinaryTree`, leaf is ``None``)
* ``P``: planar rooted trees (:class:`PlanarTree`)

Staircase coordinates: rows are numbered 1..n from the top, columns 1..n
from the left, and the size-n staircase is the cell set
``{(r, c) : r + c <= n + 1}``.  Every rectangle of a valid tiling has its
bottom-right corner on the diagonal ``r + c = n + 1``, so the rectangle at
sorted position k (1-based) ends in row k.

All values are immutable and compare structurally.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple, Optional, Union


class Family(str, Enum):
    T = "T"
    S = "S"
    A = "A"
    B = "B"
    P = "P"

    def __str__(self) -> str:
        return self.value


RECURSIVE_FAMILIES = (Family.T, Family.S, Family.A)


class CatalanError(Exception):
    """Base class for errors raised by this package."""


class InvariantError(CatalanError, ValueError):
    """A value violates the invariants of its family."""

    def __init__(self, violations, what: str = "shape"):
        self.violations = list(violations)
        super().__init__(f"invalid {what}: " + "; ".join(self.violations))


InvalidShape = InvariantError


class DomainError(InvariantError):
    """A constructor was applied outside its domain."""

    def __init__(self, violations):
        super().__init__(violations, what="construction")


# ---------------------------------------------------------------- trees


@dataclass(frozen=True, slots=True)
class Node:
    """A node of a right-swept tree.

    Allowed child combinations are: none, ``mid``, ``right``, ``left``,
    or ``left`` together with ``right``.
    """

    left: Optional[Node] = None
    mid: Optional[Node] = None
    right: Optional[Node] = None

    @property
    def kind(self) -> str:
        return "".join(
            tag for tag, child in (("L", self.left), ("M", self.mid), ("R", self.right))
            if child is not None
        ) or "."


RightSweptTree = Optional[Node]
LEAF = Node()


def tree_size(t: RightSweptTree) -> int:
    if t is None:
        return 0
    return 1 + tree_size(t.left) + tree_size(t.mid) + tree_size(t.right)


# -------------------------------------------------------------- tilings


class Rect(NamedTuple):
    r1: int
    c1: int
    r2: int
    c2: int

    @property
    def height(self) -> int:
        return self.r2 - self.r1 + 1

    @property
    def width(self) -> int:
        return self.c2 - self.c1 + 1

    def shifted(self, dr: int, dc: int) -> Rect:
        return Rect(self.r1 + dr, self.c1 + dc, self.r2 + dr, self.c2 + dc)

    def contains(self, r: int, c: int) -> bool:
        return self.r1 <= r <= self.r2 and self.c1 <= c <= self.c2


def _rect_order(rect: Rect):
    return (rect.r2, rect.r1, rect.c1, rect.c2)


@dataclass(frozen=True, slots=True)
class StaircaseTiling:
    """A tiling of the size-``n`` staircase; ``rects`` is kept sorted by ``r2``."""

    n: int
    rects: tuple[Rect, ...] = ()

    def __post_init__(self):
        rects = tuple(sorted((Rect(*r) for r in self.rects), key=_rect_order))
        object.__setattr__(self, "rects", rects)

    @classmethod
    def _trusted(cls, n: int, rects: tuple[Rect, ...]) -> StaircaseTiling:
        """Build without normalising; ``rects`` must already be Rects sorted by r2."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "rects", rects)
        return obj

    def __len__(self) -> int:
        return len(self.rects)

    def rect_at(self, r: int, c: int) -> Rect:
        for rect in self.rects:
            if rect.contains(r, c):
                return rect
        raise KeyError((r, c))

    def shifted(self, dr: int, dc: int) -> tuple[Rect, ...]:
        return tuple([Rect(a + dr, b + dc, c + dr, d + dc) for a, b, c, d in self.rects])

    def _block(self, top: int, left: int, size: int) -> StaircaseTiling:
        """Like :meth:`region` but unchecked.

        Only valid when the sub-staircase is known to be a union of whole
        rectangles; those are then exactly the ones owning its diagonal rows.
        """
        dr, dc = 1 - top, 1 - left
        return StaircaseTiling._trusted(
            size,
            tuple([Rect(a + dr, b + dc, c + dr, d + dc) for a, b, c, d in self.rects[top - 1:top - 1 + size]]),
        )

    def region(self, top: int, left: int, size: int) -> StaircaseTiling:
        """Cut out the sub-staircase of ``size`` whose top-left cell is (top, left).

        The result is expressed in its own coordinates.  Raises
        :class:`InvalidShape` if the rectangles found there do not tile it.
        Assumes ``self`` is valid, so only containment and area are checked.
        """
        dr, dc = 1 - top, 1 - left
        inside = []
        area = 0
        for rect in self.rects:
            r1, c1 = rect.r1 + dr, rect.c1 + dc
            if r1 >= 1 and c1 >= 1 and r1 + c1 <= size + 1:
                r2, c2 = rect.r2 + dr, rect.c2 + dc
                if r2 + c2 != size + 1:
                    raise InvalidShape([f"rect {tuple(rect)} straddles the region at ({top},{left}) size {size}"])
                inside.append(Rect(r1, c1, r2, c2))
                area += (r2 - r1 + 1) * (c2 - c1 + 1)
        if len(inside) != size or area != size * (size + 1) // 2:
            raise InvalidShape([f"region at ({top},{left}) size {size} is not tiled by whole rectangles"])
        return StaircaseTiling._trusted(size, tuple(inside))


def staircase_cells(n: int) -> set[tuple[int, int]]:
    return {(r, c) for r in range(1, n + 1) for c in range(1, n + 2 - r)}


# ------------------------------------------------------------ arc trees


@dataclass(frozen=True, slots=True)
class ArcTree:
    """Non-crossing arcs on points ``0..n``; ``rend[p]`` ends the arc leaving ``p``."""

    rend: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rend", tuple(self.rend))

    @property
    def n(self) -> int:
        return len(self.rend)


# ---------------------------------------------------- classical companions


@dataclass(frozen=True, slots=True)
class BinaryTree:
    """Internal node of a full binary tree; a leaf is ``None``."""

    left: Optional[BinaryTree] = None
    right: Optional[BinaryTree] = None


def binary_size(b: Optional[BinaryTree]) -> int:
    if b is None:
        return 0
    return 1 + binary_size(b.left) + binary_size(b.right)


@dataclass(frozen=True, slots=True)
class PlanarTree:
    children: tuple[PlanarTree, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))


def planar_size(p: PlanarTree) -> int:
    return sum(planar_size(child) + 1 for child in p.children)


Shape = Union[RightSweptTree, StaircaseTiling, ArcTree, Optional[BinaryTree], PlanarTree]


# ----------------------------------------------------------- validation


_ALLOWED_KINDS = frozenset((".", "M", "R", "L", "LR"))


def _tree_ok(t) -> bool:
    while t is not None:
        if type(t) is not Node:
            return False
        left, mid, right = t.left, t.mid, t.right
        if mid is not None:
            if left is not None or right is not None:
                return False
            t = mid
            continue
        if left is not None:
            if type(left) is not Node or left.mid is not None or (left.left is None and left.right is None):
                return False
            if not _tree_ok(left):
                return False
        t = right
    return True


def tree_violations(t: RightSweptTree, path: str = "root") -> list[str]:
    if path == "root" and _tree_ok(t):
        return []
    if t is None:
        return []
    if not isinstance(t, Node):
        return [f"{path}: not a tree node ({type(t).__name__})"]
    out = []
    if t.kind not in _ALLOWED_KINDS:
        out.append(f"{path}: invalid child combination {t.kind}")
    if t.left is not None and isinstance(t.left, Node):
        if t.left.kind == ".":
            out.append(f"{path}.L: left child is a leaf")
        if t.left.mid is not None:
            out.append(f"{path}.L: left child has a middle child")
    for tag, child in (("L", t.left), ("M", t.mid), ("R", t.right)):
        out.extend(tree_violations(child, f"{path}.{tag}"))
    return out


def _tiling_ok(s: StaircaseTiling) -> bool:
    n = s.n
    rects = s.rects
    if len(rects) != n:
        return False
    area = 0
    for k, (r1, c1, r2, c2) in enumerate(rects, start=1):
        if r2 != k or c2 != n + 1 - k or r1 < 1 or c1 < 1 or r1 > r2 or c1 > c2:
            return False
        area += (r2 - r1 + 1) * (c2 - c1 + 1)
    if area != n * (n + 1) // 2:
        return False
    # all rectangles lie inside the staircase; equal area + disjointness = exact cover
    for i in range(n):
        a = rects[i]
        for j in range(i + 1, n):
            b = rects[j]
            if a.r1 <= b.r2 and b.r1 <= a.r2 and a.c1 <= b.c2 and b.c1 <= a.c2:
                return False
    return True


def tiling_violations(s: StaircaseTiling) -> list[str]:
    if not isinstance(s, StaircaseTiling):
        return [f"not a staircase tiling ({type(s).__name__})"]
    if s.n >= 0 and all(type(x) is Rect for x in s.rects) and _tiling_ok(s):
        return []
    n = s.n
    out = []
    if n < 0:
        return [f"negative size {n}"]
    if len(s.rects) != n:
        out.append(f"expected {n} rectangles, found {len(s.rects)}")
    for k, rect in enumerate(s.rects, start=1):
        if not (1 <= rect.r1 <= rect.r2 and 1 <= rect.c1 <= rect.c2):
            out.append(f"rect {k} {tuple(rect)}: malformed corners")
        if rect.r2 + rect.c2 != n + 1:
            out.append(f"rect {k} {tuple(rect)}: bottom-right not on the diagonal")
        elif rect.r2 != k:
            out.append(f"rect {k} {tuple(rect)}: owns diagonal row {rect.r2}, expected {k}")
    cells = staircase_cells(n)
    owner: dict[tuple[int, int], int] = {}
    for k, rect in enumerate(s.rects, start=1):
        for r in range(rect.r1, rect.r2 + 1):
            for c in range(rect.c1, rect.c2 + 1):
                if (r, c) not in cells:
                    out.append(f"rect {k}: cell ({r},{c}) outside the staircase")
                elif (r, c) in owner:
                    out.append(f"rect {k}: cell ({r},{c}) overlaps rect {owner[(r, c)]}")
                else:
                    owner[(r, c)] = k
    missing = sorted(cells - owner.keys())
    if missing:
        out.append("uncovered cells " + ", ".join(f"({r},{c})" for r, c in missing))
    return out


def arc_violations(a: ArcTree) -> list[str]:
    if not isinstance(a, ArcTree):
        return [f"not an arc tree ({type(a).__name__})"]
    n = a.n
    rend = a.rend
    out = []
    for p, q in enumerate(rend):
        if not p < q:
            out.append(f"rend[{p}]={q} not > {p}")
        elif q > n:
            out.append(f"rend[{p}]={q} beyond rightmost point {n}")
    for p in range(n):
        for q in range(p + 1, n):
            if p < q < rend[p] < rend[q]:
                out.append(f"arcs ({p},{rend[p]}) and ({q},{rend[q]}) cross")
    if not out:
        # redundant: every point must reach the rightmost point
        for p in range(n):
            x, steps = p, 0
            while x != n and steps <= n:
                x, steps = rend[x], steps + 1
            if x != n:
                out.append(f"point {p} does not reach point {n}")
    return out


def binary_violations(b) -> list[str]:
    if b is None:
        return []
    if not isinstance(b, BinaryTree):
        return [f"not a binary tree ({type(b).__name__})"]
    return binary_violations(b.left) + binary_violations(b.right)


def planar_violations(p) -> list[str]:
    if not isinstance(p, PlanarTree):
        return [f"not a planar tree ({type(p).__name__})"]
    return [v for child in p.children for v in planar_violations(child)]


_VALIDATORS = {
    Family.T: tree_violations,
    Family.S: tiling_violations,
    Family.A: arc_violations,
    Family.B: binary_violations,
    Family.P: planar_violations,
}

_SIZES = {
    Family.T: tree_size,
    Family.S: lambda s: s.n,
    Family.A: lambda a: a.n,
    Family.B: binary_size,
    Family.P: planar_size,
}


def validate(family, shape) -> list[str]:
    """Return every violated invariant of ``shape``; empty means valid."""
    return _VALIDATORS[Family(family)](shape)


def ensure_valid(family, shape) -> None:
    problems = validate(family, shape)
    if problems:
        raise InvalidShape(problems, what=f"{Family(family).value} shape")


def size(family, shape) -> int:
    return _SIZES[Family(family)](shape)


def empty(family):
    """The unique size-0 shape of ``family``."""
    family = Family(family)
    if family is Family.S:
        return StaircaseTiling(0, ())
    if family is Family.A:
        return ArcTree(())
    if family is Family.P:
        return PlanarTree(())
    return None
