"""
Brute-force logical equivalence.

Formulas are enumerated level by level on a fixed system and kept modulo
their extension (the set of satisfying states): the extension of a formula
only depends on the extensions of its parts, so one representative per
extension loses no separating power. Diamond bounds range over the masses a
distribution of the system can actually give to a set of states, since
satisfaction only changes at those values.
"""

import itertools
import logging
from fractions import Fraction
from typing import Dict, FrozenSet, List

from rpbis.logic.formula import (TOP, Diamond, Formula, LogicId, Neg, conjoin,
                                 disjoin)
from rpbis.model.dist import dist_mass
from rpbis.model.rplts import Rplts

_logger = logging.getLogger(__name__)

Extensions = Dict[FrozenSet[str], Formula]


def achievable_masses(system: Rplts) -> List[Fraction]:
    """
    Every subset sum of every distribution of `system`, in decreasing order.
    Always contains 0 and 1.
    """
    masses = {Fraction(0), Fraction(1)}
    for _, _, dist in system.transitions():
        probs = [p for _, p in dist.items()]
        for size in range(1, len(probs) + 1):
            masses.update(sum(combo, Fraction(0)) for combo in itertools.combinations(probs, size))
    return sorted(masses, reverse=True)


def _add(reps: Extensions, extension: FrozenSet[str], f: Formula) -> bool:
    if extension in reps:
        return False
    reps[extension] = f
    return True


def _boolean_closure(system: Rplts, reps: Extensions, logic: LogicId):
    everything = frozenset(system.states)
    changed = True
    while changed:
        changed = False
        if logic.has_negation:
            for extension, f in list(reps.items()):
                changed |= _add(reps, everything - extension, Neg(f))

        current = list(reps.items())
        for (e1, f1), (e2, f2) in itertools.combinations(current, 2):
            if logic.has_and:
                changed |= _add(reps, e1 & e2, conjoin([f1, f2]))
            else:
                changed |= _add(reps, e1 | e2, disjoin([f1, f2]))


def _extensions(system: Rplts, logic: LogicId, max_depth: int) -> Extensions:
    masses = achievable_masses(system)
    reps: Extensions = {}
    _add(reps, frozenset(system.states), TOP)
    _boolean_closure(system, reps, logic)

    for level in range(1, max_depth + 1):
        before = len(reps)
        for f_ext, f in list(reps.items()):
            for action in system.actions:
                for bound in masses:
                    extension = frozenset(
                        s for s in system.states
                        if (d := system.dist(s, action)) is not None and dist_mass(d, f_ext) >= bound)
                    _add(reps, extension, Diamond(action, bound, f))
        _boolean_closure(system, reps, logic)

        _logger.debug("level %d: %d distinct extensions", level, len(reps))
        if len(reps) == before:
            break

    return reps


def enum_formulas(system: Rplts, logic: LogicId, max_depth: int) -> List[Formula]:
    """
    Fragment formulas up to `max_depth`, one per distinct extension on `system`.

    Parameters
    ----------
    system : `Rplts`

    logic : `LogicId`

    max_depth : `int`

    Returns
    -------
    formulas : `list` of `Formula`
        Finite and free of semantic duplicates; shallower formulas come first.
    """
    return list(_extensions(system, logic, max_depth).values())


def logical_eq_bruteforce(system: Rplts, s1: str, s2: str, logic: LogicId,
                          max_depth: int = None) -> bool:
    """
    True iff no formula of `logic` up to `max_depth` (default ``|S|``)
    separates `s1` from `s2`.
    """
    system.check_state(s1)
    system.check_state(s2)
    if max_depth is None:
        max_depth = len(system)
    return all((s1 in extension) == (s2 in extension)
               for extension in _extensions(system, logic, max_depth))
