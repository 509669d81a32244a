# flake8: noqa
"""
This Module implements reactive probabilistic trees. Including:
    - Hash-consed canonical trees
    - Unfolding, truncation, collapse and pruning
    - Prune based semantic equality
"""

from rpbis.rpt.ops import (collapse, first_difference, height, prune,
                           rpt_equal, semantic_eq, truncate, unfold,
                           unfold_raw)
from rpbis.rpt.render import render_dot, render_tree
from rpbis.rpt.tree import NIL, RAW_NIL, RawTree, Rpt, check_tree

__all__ = [
    "NIL",
    "RAW_NIL",
    "RawTree",
    "Rpt",
    "check_tree",
    "collapse",
    "first_difference",
    "height",
    "prune",
    "render_dot",
    "render_tree",
    "rpt_equal",
    "semantic_eq",
    "truncate",
    "unfold",
    "unfold_raw"]
