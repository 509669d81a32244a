# flake8: noqa
"""
This Module implements the probabilistic modal logics. Including:
    - The formula AST and the four fragments
    - Depth, fragment membership and canonical connectives
    - Satisfaction over systems and trees
"""

from rpbis.logic.formula import (TOP, And, Diamond, Formula, LogicId, Neg, Or,
                                 Top, bounds, conjoin, depth, disjoin,
                                 formula_key, in_fragment, is_connective_free,
                                 operands, skeleton)
from rpbis.logic.semantics import extension, sat_state, sat_tree

__all__ = [
    "TOP",
    "And",
    "Diamond",
    "Formula",
    "LogicId",
    "Neg",
    "Or",
    "Top",
    "bounds",
    "conjoin",
    "depth",
    "disjoin",
    "extension",
    "formula_key",
    "in_fragment",
    "is_connective_free",
    "operands",
    "sat_state",
    "sat_tree",
    "skeleton"]
