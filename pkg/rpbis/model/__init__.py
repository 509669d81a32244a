# flake8: noqa
"""
This Module implements the core value types. Including:
    - Exact finitely supported distributions
    - Validated reactive probabilistic labeled transition systems
"""

from rpbis.model.base import NIL_STATE
from rpbis.model.dist import Dist, dist_mass, make_dist
from rpbis.model.rplts import Rplts, validate_rplts

__all__ = [
    "NIL_STATE",
    "Dist",
    "Rplts",
    "dist_mass",
    "make_dist",
    "validate_rplts"]
