"""
Satisfaction of formulas by system states and by tree nodes.
"""

from fractions import Fraction
from typing import Dict, FrozenSet

from rpbis.logic.formula import And, Diamond, Formula, Neg, Or, Top
from rpbis.model.dist import dist_mass
from rpbis.model.rplts import Rplts
from rpbis.rpt.tree import Rpt


def extension(system: Rplts, f: Formula, _memo: Dict[Formula, FrozenSet[str]] = None) -> FrozenSet[str]:
    """
    Set of states of `system` satisfying `f`.

    A diamond ``<a>p phi`` holds at ``s`` iff ``s`` has an ``a``-transition
    whose distribution gives at least ``p`` to the states satisfying ``phi``.
    Unknown actions make diamonds false.
    """
    memo = {} if _memo is None else _memo
    found = memo.get(f)
    if found is not None:
        return found

    if isinstance(f, Top):
        result = frozenset(system.states)
    elif isinstance(f, Neg):
        result = frozenset(system.states) - extension(system, f.body, memo)
    elif isinstance(f, And):
        result = extension(system, f.left, memo) & extension(system, f.right, memo)
    elif isinstance(f, Or):
        result = extension(system, f.left, memo) | extension(system, f.right, memo)
    elif isinstance(f, Diamond):
        inner = extension(system, f.body, memo)
        result = frozenset(
            state for state in system.states
            if (dist := system.dist(state, f.action)) is not None
            and dist_mass(dist, inner) >= f.bound)
    else:
        raise TypeError(f"not a formula: {f!r}")

    memo[f] = result
    return result


def sat_state(system: Rplts, state: str, f: Formula) -> bool:
    """
    True iff `state` satisfies `f` in `system`.

    Parameters
    ----------
    system : `Rplts`

    state : `str`
        Raises `UnknownStateError` when not a state of `system`.

    f : `Formula`
    """
    system.check_state(state)
    return state in extension(system, f)


def sat_tree(t: Rpt, f: Formula, _memo: Dict = None) -> bool:
    """
    True iff the root of `t` satisfies `f`, reading the tree as a system whose
    states are its nodes.
    """
    memo = {} if _memo is None else _memo
    key = (t, f)
    found = memo.get(key)
    if found is not None:
        return found

    if isinstance(f, Top):
        result = True
    elif isinstance(f, Neg):
        result = not sat_tree(t, f.body, memo)
    elif isinstance(f, And):
        result = sat_tree(t, f.left, memo) and sat_tree(t, f.right, memo)
    elif isinstance(f, Or):
        result = sat_tree(t, f.left, memo) or sat_tree(t, f.right, memo)
    elif isinstance(f, Diamond):
        children = t.successors(f.action)
        mass = sum((w for child, w in children if sat_tree(child, f.body, memo)), Fraction(0))
        result = bool(children) and mass >= f.bound
    else:
        raise TypeError(f"not a formula: {f!r}")

    memo[key] = result
    return result
