"""Catalan families, their constructors, and the bijections between them.

Families: ``T`` right-swept trees, ``S`` staircase tilings, ``A`` arc
trees, ``B`` binary trees, ``P`` planar trees.
"""
from .alpha import alpha
from .beta import beta, beta_inv, check_beta_rules
from .classical import arcs_to_planar, binary_to_tiling, induced, planar_to_arcs, tiling_to_binary
from .codec import LiteralSyntaxError, format_literal, parse_literal
from .model import (
    ArcTree,
    BinaryTree,
    CatalanError,
    DomainError,
    Family,
    InvariantError,
    Node,
    PlanarTree,
    Rect,
    StaircaseTiling,
    validate,
)
from .terms import Term, decompose, enum_terms, enumerate_family, evaluate, step, term_of
from .verify import catalan, run_suite

__version__ = "0.1.0"

__all__ = [
    "alpha", "beta", "beta_inv", "check_beta_rules",
    "arcs_to_planar", "binary_to_tiling", "induced", "planar_to_arcs", "tiling_to_binary",
    "LiteralSyntaxError", "format_literal", "parse_literal",
    "ArcTree", "BinaryTree", "CatalanError", "DomainError", "Family", "InvariantError",
    "Node", "PlanarTree", "Rect", "StaircaseTiling", "validate",
    "Term", "decompose", "enum_terms", "enumerate_family", "evaluate", "step", "term_of",
    "catalan", "run_suite",
]
