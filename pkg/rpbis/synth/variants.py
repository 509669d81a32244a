"""
(<=, <)-variants between Phi-sets.

A set is a (<=, <)-variant of another when their connective-free members
pair up by skeleton, every bound on the first side is <= its partner's, and
at least one is strictly smaller.
"""

from collections import Counter
from typing import Dict, FrozenSet, List, Tuple

from rpbis.logic.formula import Formula, bounds, skeleton
from rpbis.synth.phi_sets import PhiSet

# Formula with its bounds erased, as returned by `skeleton`
FormulaSkeleton = tuple


def _group(formulas) -> Dict[FormulaSkeleton, List[Tuple]]:
    groups: Dict[FormulaSkeleton, List[Tuple]] = {}
    for f in formulas:
        groups.setdefault(skeleton(f), []).append(bounds(f))
    return groups


def _dominated_matching(lower: List[Tuple], upper: List[Tuple]) -> bool:
    # Perfect matching with lower[i] <= upper[j] componentwise
    match: Dict[int, int] = {}

    def augment(i, seen) -> bool:
        for j, candidate in enumerate(upper):
            if j in seen or not all(x <= y for x, y in zip(lower[i], candidate)):
                continue
            seen.add(j)
            if j not in match or augment(match[j], seen):
                match[j] = i
                return True
        return False

    return all(augment(i, set()) for i in range(len(lower)))


def basic_variant(lower: FrozenSet[Formula], upper: FrozenSet[Formula]) -> bool:
    """
    True iff the connective-free formulas `lower` form a (<=, <)-variant of `upper`.
    """
    lower_groups, upper_groups = _group(lower), _group(upper)

    # Same skeleton inventory, with multiplicities
    if {k: len(v) for k, v in lower_groups.items()} != {k: len(v) for k, v in upper_groups.items()}:
        return False

    # At least one bound must be strictly smaller
    if Counter((skeleton(f), bounds(f)) for f in lower) == \
            Counter((skeleton(f), bounds(f)) for f in upper):
        return False

    return all(_dominated_matching(lower_groups[k], upper_groups[k]) for k in lower_groups)


def is_le_lt_variant(a: PhiSet, b: PhiSet) -> bool:
    """
    True iff `a` is a (<=, <)-variant of `b`.

    Parameters
    ----------
    a, b : `PhiSet`
        Sets of the same logic.
    """
    if a.logic is not b.logic:
        raise ValueError(f"cannot compare a {a.logic} set with a {b.logic} set")
    return basic_variant(a.basic(), b.basic())
