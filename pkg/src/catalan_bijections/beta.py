"""The relative bijection between right-swept trees and staircase tilings.

The map pairs every tree node with one rectangle:

* a root with only a right child takes the full left column, and the
  child's subtree fills the staircase to its right;
* a root with only a middle child takes the full top row, and the child's
  subtree fills the staircase below;
* otherwise the left spine ``v_m = root, v_{m-1}, ..., v_1`` becomes a
  chain of rectangles along the top row, left to right from ``v_1``.
  ``v_i`` gets width ``1 + |s_i|`` where ``s_i`` is its right subtree, and
  ``s_i`` fills the sub-staircase directly below ``v_i``'s rectangle.

:func:`check_beta_rules` tests the local adjacency rules that this
construction is meant to realise, on the node/rectangle pairing.
"""
from __future__ import annotations

from typing import Optional

from .model import (
    LEAF,
    Family,
    Node,
    Rect,
    RightSweptTree,
    StaircaseTiling,
    ensure_valid,
    tree_size,
    tree_violations,
)


def beta(t: RightSweptTree) -> StaircaseTiling:
    return beta_with_map(t)[0]


def beta_with_map(t: RightSweptTree) -> tuple[StaircaseTiling, dict[str, Rect]]:
    """Return ``beta(t)`` and the rectangle assigned to each node path.

    Paths are ``"root"`` followed by ``.L``/``.M``/``.R`` per edge.
    """
    ensure_valid(Family.T, t)
    placed: dict[str, Rect] = {}
    n = tree_size(t)
    _place(t, n, 0, 0, "root", placed)
    tiling = StaircaseTiling(n, tuple(placed.values()))
    return tiling, placed


def _place(t: RightSweptTree, n: int, dr: int, dc: int, path: str, out: dict[str, Rect]) -> None:
    """Tile the size-``n`` staircase whose top-left cell is (dr+1, dc+1)."""
    if t is None:
        return
    kind = t.kind
    if kind == ".":
        out[path] = Rect(1 + dr, 1 + dc, 1 + dr, 1 + dc)
    elif kind == "R":
        out[path] = Rect(1 + dr, 1 + dc, n + dr, 1 + dc)
        _place(t.right, n - 1, dr, dc + 1, path + ".R", out)
    elif kind == "M":
        out[path] = Rect(1 + dr, 1 + dc, 1 + dr, n + dc)
        _place(t.mid, n - 1, dr + 1, dc, path + ".M", out)
    else:
        spine = []
        node, p = t, path
        while node is not None:
            spine.append((node, p))
            node, p = node.left, p + ".L"
        spine.reverse()
        col = 1
        for node, p in spine:
            w = tree_size(node.right) + 1
            end = col + w - 1
            height = n + 1 - end
            if height < 1:
                raise AssertionError(f"spine rectangle at {p} has height {height}")
            out[p] = Rect(1 + dr, col + dc, height + dr, end + dc)
            _place(node.right, w - 1, dr + height, dc + col - 1, p + ".R", out)
            col = end + 1
        if col - 1 != n:
            raise AssertionError(f"spine at {path} ends at column {col - 1}, expected {n}")


def beta_inv(s: StaircaseTiling) -> RightSweptTree:
    ensure_valid(Family.S, s)
    t = _unplace(s)
    problems = tree_violations(t)
    if problems:
        raise AssertionError("inverse produced an invalid tree: " + "; ".join(problems))
    return t


def _unplace(s: StaircaseTiling) -> RightSweptTree:
    rects = s.rects

    # the sub-staircase with top-left cell (dr+1, dc+1) owns rects[lo:lo+n]
    def go(lo: int, n: int, dr: int, dc: int) -> RightSweptTree:
        if n == 0:
            return None
        if n == 1:
            return LEAF
        top = []
        for i in range(lo, lo + n):
            r1, c1, r2, c2 = rects[i]
            if r1 == dr + 1:
                top.append((c1, r2, c2))
        top.sort()
        c1, r2, c2 = top[0]
        if c2 == dc + 1:
            return Node(right=go(lo, n - 1, dr, dc + 1))
        if r2 == dr + 1:
            return Node(mid=go(lo + 1, n - 1, dr + 1, dc))
        # column c2 of a top-row rectangle has no cells below it, so the
        # sub-staircases under the chain never touch each other
        node: Optional[Node] = None
        for c1, r2, c2 in top:
            node = Node(left=node, right=go(r2, c2 - c1, r2, c1 - 1))
        return node

    return go(0, s.n, 0, 0)


# ------------------------------------------------------------------ rules


def _right_of(a: Rect, b: Rect) -> bool:
    """``b`` sits immediately right of ``a`` with the same top row."""
    return a.c2 + 1 == b.c1 and a.r1 == b.r1


def _below(a: Rect, b: Rect) -> bool:
    """``b`` sits immediately below ``a``, inside ``a``'s columns."""
    return a.r2 + 1 == b.r1 and a.c1 <= b.c1 and b.c2 <= a.c2


def check_beta_rules(t: RightSweptTree, s: Optional[StaircaseTiling] = None) -> list[str]:
    """Check the five local placement rules on the pairing induced by :func:`beta`.

    Returns a list of violations; empty means every applicable rule holds.
    """
    image, rect = beta_with_map(t)
    report = []
    if s is not None and s != image:
        report.append("tiling is not the beta image of the tree")
    if t is None:
        return report

    def walk(node: Node, path: str, is_left: bool) -> None:
        a = rect[path]
        if node.left is not None:
            # rule 1
            if not _right_of(rect[path + ".L"], a):
                report.append(f"rule 1 at {path}: not immediately right of its left child")
        if node.mid is not None:
            # rule 4
            if not _below(a, rect[path + ".M"]):
                report.append(f"rule 4 at {path}: middle child not immediately below")
        if node.right is not None:
            b_path = path + ".R"
            b = rect[b_path]
            if is_left or node.left is not None:
                # rule 3
                if not _below(a, b):
                    report.append(f"rule 3 at {path}: right child not immediately below")
            elif node.right.left is None:
                # rule 2
                if not _right_of(a, b):
                    report.append(f"rule 2 at {path}: right child not immediately right")
            else:
                # rule 5: b's left chain sits between a and b
                chain = []
                x, p = node.right, b_path
                while x is not None:
                    chain.append(rect[p])
                    x, p = x.left, p + ".L"
                chain.reverse()
                if _right_of(a, b):
                    report.append(f"rule 5 at {path}: right child adjacent despite a left chain")
                if not _right_of(a, chain[0]):
                    report.append(f"rule 5 at {path}: chain does not start next to the parent")
                for u, v in zip(chain, chain[1:]):
                    if not _right_of(u, v):
                        report.append(f"rule 5 at {path}: chain broken between {tuple(u)} and {tuple(v)}")
        for tag, child in (("L", node.left), ("M", node.mid), ("R", node.right)):
            if child is not None:
                walk(child, f"{path}.{tag}", tag == "L")

    walk(t, "root", False)
    return report
