"""The recursive bijection between any two of ``T``, ``S`` and ``A``."""
from __future__ import annotations

from .model import Family, RECURSIVE_FAMILIES
from .terms import _evaluate, term_of


def alpha(source, target, shape):
    """Map ``shape`` from ``source`` to ``target`` by rebuilding its construction term.

    >>> from catalan_bijections.model import StaircaseTiling
    >>> alpha("S", "T", StaircaseTiling(1, [(1, 1, 1, 1)]))
    Node(left=None, mid=None, right=None)
    """
    source, target = Family(source), Family(target)
    for fam in (source, target):
        if fam not in RECURSIVE_FAMILIES:
            raise ValueError(f"alpha is defined on T, S and A, not {fam.value}")
    return _evaluate(target, term_of(source, shape))
