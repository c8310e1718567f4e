"""Classical bijections: tilings <-> binary trees, arc trees <-> planar trees.

Conventions.  For a tiling whose top-left rectangle ends at row ``h``,
the binary tree's left subtree comes from the sub-staircase to the right
of that rectangle (size ``h - 1``) and its right subtree from the one below
it (size ``n - h``).  Planar children are ordered by increasing left
endpoint, so a planar tree's post-order numbering recovers the points.
"""
from __future__ import annotations

from typing import Optional

from .alpha import alpha
from .model import (
    ArcTree,
    BinaryTree,
    Family,
    PlanarTree,
    Rect,
    StaircaseTiling,
    binary_size,
    ensure_valid,
)


def tiling_to_binary(s: StaircaseTiling) -> Optional[BinaryTree]:
    ensure_valid(Family.S, s)
    return _tiling_to_binary(s)


def _tiling_to_binary(s: StaircaseTiling) -> Optional[BinaryTree]:
    rects = s.rects

    # the sub-staircase with top-left cell (dr+1, dc+1) owns rects[lo:lo+n]
    def go(lo: int, n: int, dr: int, dc: int) -> Optional[BinaryTree]:
        if n == 0:
            return None
        for h in range(1, n + 1):
            r1, c1, _, _ = rects[lo + h - 1]
            if r1 == dr + 1 and c1 == dc + 1:
                break
        w = n + 1 - h
        return BinaryTree(go(lo, h - 1, dr, dc + w), go(lo + h, n - h, dr + h, dc))

    return go(0, s.n, 0, 0)


def binary_to_tiling(b: Optional[BinaryTree]) -> StaircaseTiling:
    ensure_valid(Family.B, b)
    return _binary_to_tiling(b)


def _binary_to_tiling(b: Optional[BinaryTree]) -> StaircaseTiling:
    sizes: dict[int, int] = {}

    def measure(node: Optional[BinaryTree]) -> int:
        if node is None:
            return 0
        k = sizes[id(node)] = measure(node.left) + measure(node.right) + 1
        return k

    out: list[Rect] = []

    # appends in diagonal order: right of the corner, the corner, below it
    def emit(node: Optional[BinaryTree], n: int, dr: int, dc: int) -> None:
        if node is None:
            return
        h = (sizes[id(node.left)] if node.left is not None else 0) + 1
        w = n + 1 - h
        emit(node.left, h - 1, dr, dc + w)
        out.append(Rect(dr + 1, dc + 1, dr + h, dc + w))
        emit(node.right, n - h, dr + h, dc)

    n = measure(b)
    emit(b, n, 0, 0)
    return StaircaseTiling._trusted(n, tuple(out))


def arcs_to_planar(a: ArcTree) -> PlanarTree:
    ensure_valid(Family.A, a)
    return _arcs_to_planar(a)


def _arcs_to_planar(a: ArcTree) -> PlanarTree:
    children: dict[int, list[int]] = {q: [] for q in range(a.n + 1)}
    for p, q in enumerate(a.rend):
        children[q].append(p)

    def build(v: int) -> PlanarTree:
        return PlanarTree(tuple(build(c) for c in children[v]))

    return build(a.n)


def planar_to_arcs(p: PlanarTree) -> ArcTree:
    ensure_valid(Family.P, p)
    rend: list[int] = []

    def place(node: PlanarTree) -> int:
        # post-order: children get their numbers before the parent
        kids = [place(child) for child in node.children]
        me = len(rend)
        rend.append(-1)
        for k in kids:
            rend[k] = me
        return me

    root = place(p)
    del rend[root]
    return ArcTree(tuple(rend))


def to_recursive(family, shape):
    """Move a B or P shape into S or A; T, S and A pass through."""
    family = Family(family)
    if family is Family.B:
        return Family.S, binary_to_tiling(shape)
    if family is Family.P:
        return Family.A, planar_to_arcs(shape)
    return family, shape


def from_recursive(family, shape):
    """Convert a shape of the recursive family behind ``family`` back into ``family``."""
    family = Family(family)
    if family is Family.B:
        return tiling_to_binary(shape)
    if family is Family.P:
        return arcs_to_planar(shape)
    return shape


_HOST = {Family.B: Family.S, Family.P: Family.A}


def transport(source, target, shape):
    """Map between any two families via alpha, detouring through S for B and A for P."""
    source, target = Family(source), Family(target)
    if source is target:
        return shape
    fam, x = to_recursive(source, shape)
    x = alpha(fam, _HOST.get(target, target), x)
    return from_recursive(target, x)


def induced(source, target, shape):
    """Binary/planar correspondence induced by alpha between tilings and arc trees."""
    source, target = Family(source), Family(target)
    for fam in (source, target):
        if fam not in (Family.B, Family.P):
            raise ValueError(f"induced maps act on B and P, not {fam.value}")
    return transport(source, target, shape)


__all__ = [
    "tiling_to_binary",
    "binary_to_tiling",
    "arcs_to_planar",
    "planar_to_arcs",
    "induced",
    "transport",
    "binary_size",
]
