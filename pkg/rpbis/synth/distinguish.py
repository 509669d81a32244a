"""
Distinguishing formula synthesis for the four logics.

Every construction works on two different canonical trees and recurses on
their children:

- with negation, pick a child ``t'`` that the first tree reaches with higher
  probability, separate it from every other child of the second tree and
  negate the sub-results into the right orientation;
- without negation, pick ``t'`` among the children with different
  probabilities whose Phi-set has no (<=, <)-variant, then look up witness
  formulas in the Phi-sets and fix the bound from the mass of the children
  with equal probabilities.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from rpbis.exceptions import PhiSetOverflowError, SynthesisError
from rpbis.logic.formula import (Diamond, Formula, LogicId, Neg, conjoin,
                                 depth, disjoin, formula_key)
from rpbis.logic.semantics import sat_tree
from rpbis.model.rplts import Rplts
from rpbis.rpt.ops import first_difference, unfold
from rpbis.rpt.tree import Rpt
from rpbis.synth.phi_sets import (and_members, basic_members,
                                  closed_and_members, is_member, or_members,
                                  phi_size, sorted_members)
from rpbis.synth.variants import basic_variant

_logger = logging.getLogger(__name__)

_ZERO = Fraction(0)


@dataclass(frozen=True)
class Fallback:
    """
    A negation-free step where the child of least (or, for conjunctions,
    greatest) Phi-set size had no witness and a later candidate was used.

    Parameters
    ----------
    action : `str`

    attempt : `int`
        1-based rank of the candidate that produced the formula.

    subset_minimal : `bool` or None
        Whether that candidate's Phi-set is minimal by inclusion among the
        survivors (maximal for conjunctions). None when a set overflowed.
    """
    action: str
    attempt: int
    subset_minimal: Optional[bool]


@dataclass(frozen=True)
class Distinction:
    """
    A distinguishing formula together with the side satisfying it.

    Parameters
    ----------
    formula : `Formula`

    logic : `LogicId`

    satisfied_by : `int`
        0 when the first tree (or state) satisfies `formula`, 1 for the second.

    minimal_level : `int`, (optional)
        For states, the least pruning level at which they differ.

    fallbacks : `tuple` of `Fallback`, (optional)
        Steps where the preferred child had no witness.
    """
    formula: Formula
    logic: LogicId
    satisfied_by: int
    minimal_level: Optional[int] = None
    fallbacks: Tuple[Fallback, ...] = ()

    @property
    def depth(self) -> int:
        return depth(self.formula)


class _Synthesizer:
    """
    One synthesis run for a fixed logic; sub-results are shared across the
    recursion.
    """

    def __init__(self, logic: LogicId):
        self.logic = logic
        self.fallbacks: List[Fallback] = []
        self._memo: Dict[Tuple[Rpt, Rpt], Tuple[Formula, int]] = {}

    def distinguish(self, t1: Rpt, t2: Rpt) -> Tuple[Formula, int]:
        if t1 is t2:
            raise ValueError("equal trees cannot be distinguished")
        key = (t1, t2)
        if key not in self._memo:
            self._memo[key] = self._distinguish(t1, t2)
        return self._memo[key]

    def _distinguish(self, t1: Rpt, t2: Rpt) -> Tuple[Formula, int]:
        init1, init2 = set(t1.init()), set(t2.init())

        # Different enabled actions
        if init1 != init2:
            action = min(init1 ^ init2)
            return self._orient(Diamond(action, Fraction(1)), 0 if action in init1 else 1)

        for action in sorted(init1):
            d1, d2 = dict(t1.successors(action)), dict(t2.successors(action))
            if d1 == d2:
                continue
            if self.logic.has_negation:
                return self._negation_step(action, d1, d2)
            found = self._positive_step(action, d1, d2)
            if found is not None:
                return found

        raise SynthesisError(
            f"no {self.logic.value} formula found for trees differing under {sorted(init1)}")

    def _orient(self, f: Formula, side: int) -> Tuple[Formula, int]:
        # neg-and formulas hold on the first tree, neg-or ones on the second
        if self.logic is LogicId.PML_NEG_AND and side == 1:
            return Neg(f), 0
        if self.logic is LogicId.PML_NEG_OR and side == 0:
            return Neg(f), 1
        return f, side

    def _negation_step(self, action, d1, d2) -> Tuple[Formula, int]:
        favoured = sorted((c for c in d1 if d1[c] > d2.get(c, _ZERO)), key=lambda c: c.sort_key)
        if not favoured:
            raise SynthesisError("different distributions without a favoured child")
        chosen = favoured[0]

        parts = []
        for other in sorted(d2, key=lambda c: c.sort_key):
            if other is chosen:
                continue
            f, side = self.distinguish(chosen, other)
            if self.logic is LogicId.PML_NEG_AND:
                parts.append(f if side == 0 else Neg(f))
            else:
                parts.append(f if side == 1 else Neg(f))

        if self.logic is LogicId.PML_NEG_AND:
            return Diamond(action, d1[chosen], conjoin(parts)), 0
        return Diamond(action, 1 - d2.get(chosen, _ZERO), disjoin(parts)), 1

    def _rank(self, nodes: List[Rpt]) -> List[Rpt]:
        sizes = {}
        for node in nodes:
            try:
                sizes[node] = phi_size(node, self.logic)
            except PhiSetOverflowError:
                _logger.warning("Phi-set of a height %d node overflows; ranked last", node.height)
                sizes[node] = float("inf") if self.logic is LogicId.PML_OR else -1

        # Ties go to the later node in canonical order
        ranked = sorted(nodes, key=lambda c: c.sort_key, reverse=True)
        if self.logic is LogicId.PML_OR:
            return sorted(ranked, key=lambda c: sizes[c])
        return sorted(ranked, key=lambda c: sizes[c], reverse=True)

    def _positive_step(self, action, d1, d2) -> Optional[Tuple[Formula, int]]:
        support = set(d1) | set(d2)
        unequal = sorted((c for c in support if d1.get(c, _ZERO) != d2.get(c, _ZERO)),
                         key=lambda c: c.sort_key)
        equal = [c for c in support if d1.get(c, _ZERO) == d2.get(c, _ZERO)]
        if len(unequal) < 2:
            raise SynthesisError("different distributions differ on fewer than two children")

        basics = {c: basic_members(c) for c in unequal}
        if self.logic is LogicId.PML_OR:
            # Drop children whose set has a variant with smaller bounds
            survivors = [c for c in unequal
                         if not any(basic_variant(basics[o], basics[c]) for o in unequal if o is not c)]
        else:
            survivors = [c for c in unequal
                         if not any(basic_variant(basics[c], basics[o]) for o in unequal if o is not c)]
        if not survivors:
            raise SynthesisError("every child has a Phi-set with a (<=, <)-variant")

        dropped = [c for c in unequal if c not in survivors]
        for attempt, chosen in enumerate(self._rank(survivors) + self._rank(dropped)):
            if attempt:
                _logger.warning("falling back to candidate %d under action %r", attempt + 1, action)
            found = self._try_candidate(action, chosen, d1, d2, unequal, equal)
            if found is not None:
                if attempt:
                    self.fallbacks.append(
                        Fallback(action, attempt + 1, self._subset_minimal(chosen, survivors)))
                return found
        return None

    def _subset_minimal(self, chosen: Rpt, survivors: List[Rpt]) -> Optional[bool]:
        if chosen not in survivors:
            return False
        members = or_members if self.logic is LogicId.PML_OR else and_members
        try:
            own = members(chosen)
            others = [members(o) for o in survivors if o is not chosen]
        except PhiSetOverflowError:
            return None
        if self.logic is LogicId.PML_OR:
            return not any(other < own for other in others)
        return not any(other > own for other in others)

    def _try_candidate(self, action, chosen, d1, d2, unequal, equal):
        if d1.get(chosen, _ZERO) > d2.get(chosen, _ZERO):
            high, low, high_side = d1, d2, 0
        else:
            high, low, high_side = d2, d1, 1

        opponents = [c for c in unequal if c is not chosen and c in low]
        witnesses = []
        for opponent in opponents:
            witness = self._witness(chosen, opponent)
            if witness is None:
                _logger.debug("no witness against an opponent of height %d", opponent.height)
                return None
            witnesses.append(witness)

        if self.logic is LogicId.PML_OR:
            body = disjoin(witnesses)
            missed = sum((low[c] for c in equal if not sat_tree(c, body)), _ZERO)
            bound = 1 - (low.get(chosen, _ZERO) + missed)
            return Diamond(action, bound, body), 1 - high_side

        body = conjoin(witnesses)
        hit = sum((high[c] for c in equal if sat_tree(c, body)), _ZERO)
        return Diamond(action, high[chosen] + hit, body), high_side

    def _witness(self, chosen: Rpt, opponent: Rpt) -> Optional[Formula]:
        """
        For the disjunctive logic a member of the opponent's set that `chosen`
        fails; for the conjunctive one a closed member of the set of `chosen`
        that the opponent fails.
        """
        if self.logic is LogicId.PML_OR:
            holder, target, members = opponent, chosen, or_members
        else:
            holder, target, members = chosen, opponent, closed_and_members

        for f in sorted(basic_members(holder), key=formula_key):
            if not sat_tree(target, f):
                return f

        try:
            for f in sorted_members(members(holder)):
                if not sat_tree(target, f):
                    return f
        except PhiSetOverflowError:
            _logger.debug("Phi-set too large to scan, trying the recursive formula")

        # Recursive separation of the two children
        try:
            f, side = self.distinguish(chosen, opponent)
        except SynthesisError:
            return None
        holder_side = 1 if self.logic is LogicId.PML_OR else 0
        if side != holder_side:
            return None
        if not is_member(f, holder, self.logic):
            _logger.debug("recursive witness is not a Phi-set member")
        return f


def explain_trees(t1: Rpt, t2: Rpt, logic: LogicId) -> Optional[Distinction]:
    """
    Distinguishing formula of `t1` and `t2` with the satisfying side.

    Returns
    -------
    distinction : `Distinction` or None
        None iff the trees are equal.
    """
    if t1 is t2:
        return None
    synthesizer = _Synthesizer(logic)
    f, side = synthesizer.distinguish(t1, t2)
    _logger.debug("%s formula of depth %d holds on side %d", logic.value, depth(f), side)
    return Distinction(f, logic, side, fallbacks=tuple(synthesizer.fallbacks))


def distinguish_trees(t1: Rpt, t2: Rpt, logic: LogicId) -> Optional[Formula]:
    """
    Formula of `logic` satisfied by exactly one of `t1` and `t2`.

    Parameters
    ----------
    t1, t2 : `Rpt`

    logic : `LogicId`

    Returns
    -------
    formula : `Formula` or None
        None iff the trees are equal. Otherwise its depth is at most the
        larger height.
    """
    found = explain_trees(t1, t2, logic)
    return None if found is None else found.formula


def explain_states(system: Rplts, s1: str, s2: str, logic: LogicId) -> Optional[Distinction]:
    """
    Distinguishing formula of two states, built on their prunings at the
    least level where they differ.
    """
    level = first_difference(system, s1, s2)
    if level is None:
        return None
    found = explain_trees(unfold(system, s1, level), unfold(system, s2, level), logic)
    return Distinction(found.formula, logic, found.satisfied_by, level, found.fallbacks)


def distinguish_states(system: Rplts, s1: str, s2: str, logic: LogicId) -> Optional[Formula]:
    """
    Formula of `logic` separating `s1` from `s2` in `system`, or None when
    they are bisimilar.
    """
    found = explain_states(system, s1, s2, logic)
    return None if found is None else found.formula
