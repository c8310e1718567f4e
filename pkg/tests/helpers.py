"""Small builders shared by the tests."""
from catalan_bijections.model import LEAF, Node, StaircaseTiling


def tiling(*rects) -> StaircaseTiling:
    return StaircaseTiling(len(rects), rects)


def mid_chain(k: int):
    t = None
    for _ in range(k):
        t = Node(mid=t) if t is not None else LEAF
    return t


def right_chain(k: int):
    t = None
    for _ in range(k):
        t = Node(right=t) if t is not None else LEAF
    return t
