"""
Phi-sets: the finite canonical formula sets attached to tree nodes.

The disjunctive set of a node holds ``<a>1`` for every enabled action and,
per action, ``<a>w (phi_1 | ... | phi_k)`` where the operands are picked from
the sets of distinct children (one operand per child, equal operands merged)
and ``w`` is the highest bound obtainable for that body.

The conjunctive set holds ``<a>1`` per action and ``<a>w /\\K`` for every
non-empty subset ``K`` of a child's set, where ``w`` sums the weights of all
children whose set contains ``K``.

Disjunctive sets are materialised. Conjunctive sets grow with the power set of
the children's sets, so their size and membership are computed symbolically
and they are only materialised on request. Witness search scans the closed
members, which need the children's sets only.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Set

import pandas as pd

from rpbis.exceptions import PhiSetOverflowError
from rpbis.logic.formula import (And, Diamond, Formula, LogicId, Or, Top,
                                 conjoin, depth, disjoin, formula_key,
                                 is_connective_free, operands)
from rpbis.rpt.tree import Rpt
from rpbis.utils import settings

_logger = logging.getLogger(__name__)

_CACHE_SIZE = 1 << 14


@dataclass(frozen=True)
class PhiSet:
    """
    Canonical formula set of a tree node.

    Parameters
    ----------
    logic : `LogicId`
        ``PML_OR`` or ``PML_AND``.

    formulas : `frozenset` of `Formula`
    """
    logic: LogicId
    formulas: FrozenSet[Formula]

    def __post_init__(self):
        if self.logic not in (LogicId.PML_OR, LogicId.PML_AND):
            raise ValueError(f"Phi-sets exist for the positive logics only, got {self.logic}")

    def __len__(self):
        return len(self.formulas)

    def __iter__(self):
        return iter(self.sorted())

    def __contains__(self, f):
        return f in self.formulas

    def sorted(self) -> List[Formula]:
        return sorted(self.formulas, key=formula_key)

    def basic(self) -> FrozenSet[Formula]:
        """Members without disjunction or conjunction."""
        return frozenset(f for f in self.formulas if is_connective_free(f))

    def to_frame(self, decimal: bool = False) -> pd.DataFrame:
        """
        Members in a pandas DataFrame format, one row per formula.
        """
        from rpbis.parser.render import render_formula

        rows = [(render_formula(f, decimal), f.bound, depth(f), is_connective_free(f))
                for f in self.sorted()]
        return pd.DataFrame(rows, columns=["formula", "bound", "depth", "basic"])


def _overflow(what: str, size) -> PhiSetOverflowError:
    return PhiSetOverflowError(
        f"{what} exceeds {settings.MAX_PHI_SET_SIZE} formulas (reached {size})")


@lru_cache(maxsize=_CACHE_SIZE)
def basic_members(t: Rpt) -> FrozenSet[Formula]:
    """
    Connective-free members of the Phi-sets of `t`.

    They coincide for both logics: ``<a>w phi`` with ``phi`` basic in the set
    of some child and ``w`` the weight of all children holding ``phi``.
    """
    members = set()
    for action, children in t.succ:
        members.add(Diamond(action, Fraction(1)))
        weights: Dict[Formula, Fraction] = {}
        for child, weight in children:
            for f in basic_members(child):
                weights[f] = weights.get(f, Fraction(0)) + weight
        members.update(Diamond(action, w, f) for f, w in weights.items())
    return frozenset(members)


@lru_cache(maxsize=_CACHE_SIZE)
def or_members(t: Rpt) -> FrozenSet[Formula]:
    """
    Materialised disjunctive Phi-set of `t`.

    Per action, a dynamic program over the children maps every reachable
    operand set to the highest summed weight of children choosing into it.
    """
    members = set()
    for action, children in t.succ:
        members.add(Diamond(action, Fraction(1)))

        best: Dict[FrozenSet[Formula], Fraction] = {frozenset(): Fraction(0)}
        for child, weight in children:
            options = or_members(child)
            if not options:
                continue
            extended = dict(best)
            for chosen, total in best.items():
                for f in options:
                    key = chosen | {f}
                    if extended.get(key, -1) < total + weight:
                        extended[key] = total + weight
            if len(extended) > settings.MAX_PHI_SET_SIZE:
                raise _overflow("disjunctive Phi-set", len(extended))
            best = extended

        members.update(
            Diamond(action, total, disjoin(chosen)) for chosen, total in best.items() if chosen)

    if len(members) > settings.MAX_PHI_SET_SIZE:
        raise _overflow("disjunctive Phi-set", len(members))
    return frozenset(members)


@lru_cache(maxsize=_CACHE_SIZE)
def and_members(t: Rpt) -> FrozenSet[Formula]:
    """
    Materialised conjunctive Phi-set of `t`. Raises `PhiSetOverflowError`
    before enumerating more than ``MAX_PHI_SET_SIZE`` formulas.
    """
    if and_count(t) > settings.MAX_PHI_SET_SIZE:
        raise _overflow("conjunctive Phi-set", and_count(t))

    members = set()
    for action, children in t.succ:
        members.add(Diamond(action, Fraction(1)))
        weights: Dict[FrozenSet[Formula], Fraction] = {}
        for child, weight in children:
            options = sorted(and_members(child), key=formula_key)
            for size in range(1, len(options) + 1):
                for chosen in itertools.combinations(options, size):
                    key = frozenset(chosen)
                    weights[key] = weights.get(key, Fraction(0)) + weight
        members.update(Diamond(action, w, conjoin(k)) for k, w in weights.items())
    return frozenset(members)


@lru_cache(maxsize=_CACHE_SIZE)
def closed_and_members(t: Rpt) -> FrozenSet[Formula]:
    """
    Members of the conjunctive Phi-set of `t` with a closed body: ``K`` is the
    intersection of the sets of all children containing it.

    Every member ``<a>w /\\K`` is implied by the closed member built on the
    intersection of the sets holding ``K``, which has the same holders and so
    the same bound. A tree failing some member therefore fails a closed one.
    Only the children's sets are materialised.
    """
    members = set()
    for action, children in t.succ:
        members.add(Diamond(action, Fraction(1)))
        child_sets = [(and_members(child), weight) for child, weight in children]

        closed: Set[FrozenSet[Formula]] = set()
        for options, _ in child_sets:
            if not options:
                continue
            closed |= {options} | {options & body for body in closed}
            closed.discard(frozenset())
            if len(closed) > settings.MAX_PHI_SET_SIZE:
                raise _overflow("closed conjunctive bodies", len(closed))

        for body in closed:
            weight = sum((w for options, w in child_sets if body <= options), Fraction(0))
            members.add(Diamond(action, weight, conjoin(body)))
    return frozenset(members)


def _superset_mobius(values: List[int], width: int) -> List[int]:
    # exact[X] = sum over Y >= X of (-1)^|Y - X| * values[Y]
    exact = list(values)
    for bit in range(width):
        flag = 1 << bit
        for mask in range(1 << width):
            if not mask & flag:
                exact[mask] -= exact[mask | flag]
    return exact


@lru_cache(maxsize=_CACHE_SIZE)
def _common_and(nodes: FrozenSet[Rpt]) -> int:
    """
    Number of formulas shared by the conjunctive Phi-sets of all `nodes`.

    A body ``K`` sits under the children whose sets contain it. For every set
    ``X`` of children, inclusion-exclusion over supersets counts the bodies
    contained in exactly the sets of ``X``; such a body is common to all nodes
    when each node has a child in ``X`` and the weights agree.
    """
    shared = set.intersection(*(set(node.init()) for node in nodes))
    total = len(shared)

    for action in sorted(shared):
        weight_maps = [dict(node.successors(action)) for node in nodes]
        universe = sorted(set().union(*weight_maps), key=lambda c: c.sort_key)
        width = len(universe)
        if width > settings.MAX_SYMBOLIC_CHILDREN:
            raise _overflow("symbolic count over children", width)

        contained = [0] * (1 << width)
        for mask in range(1, 1 << width):
            group = frozenset(universe[i] for i in range(width) if mask >> i & 1)
            common = _common_and(group)
            if common > settings.MAX_PHI_SET_SIZE:
                raise _overflow("conjunctive Phi-set", common)
            contained[mask] = (1 << common) - 1

        exact = _superset_mobius(contained, width)
        for mask in range(1, 1 << width):
            if not exact[mask]:
                continue
            group = [universe[i] for i in range(width) if mask >> i & 1]
            masses = set()
            for weights in weight_maps:
                held = [weights[c] for c in group if c in weights]
                if not held:
                    break
                masses.add(sum(held, Fraction(0)))
            else:
                if len(masses) == 1:
                    total += exact[mask]

    return total


def and_count(t: Rpt) -> int:
    """Cardinality of the conjunctive Phi-set of `t`, without materialising it."""
    return _common_and(frozenset((t,)))


def _matchable(operand_list: List[Formula], holders: Dict[Formula, List[Rpt]]) -> bool:
    # Every operand needs its own child
    match: Dict[Rpt, Formula] = {}

    def augment(f, seen) -> bool:
        for child in holders[f]:
            if child in seen:
                continue
            seen.add(child)
            if child not in match or augment(match[child], seen):
                match[child] = f
                return True
        return False

    return all(augment(f, set()) for f in operand_list)


@lru_cache(maxsize=1 << 16)
def is_or_member(f: Formula, t: Rpt) -> bool:
    """Membership in the disjunctive Phi-set of `t`, decided structurally."""
    if not isinstance(f, Diamond) or f.action not in t.init():
        return False
    if isinstance(f.body, Top):
        return f.bound == 1

    parts = operands(f.body, Or)
    if disjoin(parts) != f.body or not all(isinstance(p, Diamond) for p in parts):
        return False

    children = t.successors(f.action)
    holders = {p: [c for c, _ in children if is_or_member(p, c)] for p in parts}
    if not _matchable(parts, holders):
        return False

    reached = {c for held in holders.values() for c in held}
    return sum((w for c, w in children if c in reached), Fraction(0)) == f.bound


@lru_cache(maxsize=1 << 16)
def is_and_member(f: Formula, t: Rpt) -> bool:
    """Membership in the conjunctive Phi-set of `t`, decided structurally."""
    if not isinstance(f, Diamond) or f.action not in t.init():
        return False
    if isinstance(f.body, Top):
        return f.bound == 1

    parts = operands(f.body, And)
    if conjoin(parts) != f.body or not all(isinstance(p, Diamond) for p in parts):
        return False

    holders = [w for c, w in t.successors(f.action)
               if all(is_and_member(p, c) for p in parts)]
    return bool(holders) and sum(holders, Fraction(0)) == f.bound


def phi_or(t: Rpt) -> PhiSet:
    """
    Disjunctive Phi-set of `t`.

    Parameters
    ----------
    t : `Rpt`

    Returns
    -------
    phi : `PhiSet`
        Empty for nil.
    """
    return PhiSet(LogicId.PML_OR, or_members(t))


def phi_and(t: Rpt) -> PhiSet:
    """
    Conjunctive Phi-set of `t`, with weights of equal bodies from different
    children summed.
    """
    return PhiSet(LogicId.PML_AND, and_members(t))


def phi_set(t: Rpt, logic: LogicId) -> PhiSet:
    if logic is LogicId.PML_OR:
        return phi_or(t)
    if logic is LogicId.PML_AND:
        return phi_and(t)
    raise ValueError(f"Phi-sets exist for the positive logics only, got {logic}")


def phi_size(t: Rpt, logic: LogicId) -> int:
    """Cardinality of the Phi-set of `t` for `logic`."""
    if logic is LogicId.PML_OR:
        return len(or_members(t))
    if logic is LogicId.PML_AND:
        return and_count(t)
    raise ValueError(f"Phi-sets exist for the positive logics only, got {logic}")


def is_member(f: Formula, t: Rpt, logic: LogicId) -> bool:
    if logic is LogicId.PML_OR:
        return is_or_member(f, t)
    if logic is LogicId.PML_AND:
        return is_and_member(f, t)
    raise ValueError(f"Phi-sets exist for the positive logics only, got {logic}")


def sorted_members(formulas: Iterable[Formula]) -> List[Formula]:
    """Connective-free members first, each group in canonical order."""
    return sorted(formulas, key=lambda f: (not is_connective_free(f), formula_key(f)))
