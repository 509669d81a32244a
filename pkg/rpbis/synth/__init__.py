# flake8: noqa
"""
This Module implements distinguishing formula synthesis. Including:
    - Disjunctive and conjunctive Phi-sets
    - (<=, <)-variants between Phi-sets
    - Synthesis for trees and states in the four logics
"""

from rpbis.synth.distinguish import (Distinction, Fallback, distinguish_states,
                                     distinguish_trees, explain_states,
                                     explain_trees)
from rpbis.synth.phi_sets import (PhiSet, and_count, basic_members,
                                  closed_and_members, is_member, phi_and,
                                  phi_or, phi_set, phi_size)
from rpbis.synth.variants import FormulaSkeleton, basic_variant, is_le_lt_variant

__all__ = [
    "Distinction",
    "Fallback",
    "FormulaSkeleton",
    "PhiSet",
    "and_count",
    "basic_members",
    "basic_variant",
    "closed_and_members",
    "distinguish_states",
    "distinguish_trees",
    "explain_states",
    "explain_trees",
    "is_le_lt_variant",
    "is_member",
    "phi_and",
    "phi_or",
    "phi_set",
    "phi_size"]
