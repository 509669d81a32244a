# flake8: noqa
"""
This Module implements probabilistic bisimilarity. Including:
    - Coarsest bisimulation by partition refinement
    - Quotient (lumped) systems
"""

from rpbis.bisim.partition import Partition, bisim_partition, bisimilar, quotient

__all__ = [
    "Partition",
    "bisim_partition",
    "bisimilar",
    "quotient"]
