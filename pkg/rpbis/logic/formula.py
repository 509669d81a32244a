"""
Formula AST of the probabilistic modal logics and the structural helpers
used across the package.
"""

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Tuple


class LogicId(enum.Enum):
    """
    The four logic fragments. The value is the command line name.
    """
    PML_NEG_AND = "neg-and"
    PML_NEG_OR = "neg-or"
    PML_AND = "and"
    PML_OR = "or"

    @classmethod
    def from_name(cls, name: str) -> "LogicId":
        for logic in cls:
            if name in (logic.value, logic.name, logic.name.lower()):
                return logic
        names = ", ".join(logic.value for logic in cls)
        raise ValueError(f"unknown logic {name!r}, expected one of: {names}")

    @property
    def has_negation(self) -> bool:
        return self in (LogicId.PML_NEG_AND, LogicId.PML_NEG_OR)

    @property
    def has_and(self) -> bool:
        return self in (LogicId.PML_NEG_AND, LogicId.PML_AND)

    @property
    def has_or(self) -> bool:
        return self in (LogicId.PML_NEG_OR, LogicId.PML_OR)


class Formula:
    """Base class of all formula nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class Top(Formula):
    pass


TOP = Top()


@dataclass(frozen=True)
class Neg(Formula):
    body: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Diamond(Formula):
    action: str
    bound: Fraction
    body: Formula = field(default=TOP)

    def __post_init__(self):
        if not 0 <= self.bound <= 1:
            raise ValueError(f"diamond bound {self.bound} outside [0, 1]")


def in_fragment(f: Formula, logic: LogicId) -> bool:
    """
    True iff `f` only uses the connectives of `logic`.
    """
    if isinstance(f, Top):
        return True
    if isinstance(f, Diamond):
        return in_fragment(f.body, logic)
    if isinstance(f, Neg):
        return logic.has_negation and in_fragment(f.body, logic)
    if isinstance(f, And):
        return logic.has_and and in_fragment(f.left, logic) and in_fragment(f.right, logic)
    if isinstance(f, Or):
        return logic.has_or and in_fragment(f.left, logic) and in_fragment(f.right, logic)
    raise TypeError(f"not a formula: {f!r}")


def depth(f: Formula) -> int:
    """
    Diamond nesting depth. Negation is transparent, binary connectives take the max.
    """
    if isinstance(f, Top):
        return 0
    if isinstance(f, Neg):
        return depth(f.body)
    if isinstance(f, (And, Or)):
        return max(depth(f.left), depth(f.right))
    if isinstance(f, Diamond):
        return 1 + depth(f.body)
    raise TypeError(f"not a formula: {f!r}")


@lru_cache(maxsize=1 << 16)
def formula_key(f: Formula) -> tuple:
    """
    Total order on formulas, used wherever a canonical ordering is needed.
    """
    if isinstance(f, Top):
        return ("T",)
    if isinstance(f, Neg):
        return ("N", formula_key(f.body))
    if isinstance(f, And):
        return ("A", formula_key(f.left), formula_key(f.right))
    if isinstance(f, Or):
        return ("O", formula_key(f.left), formula_key(f.right))
    return ("D", f.action, f.bound, formula_key(f.body))


def operands(f: Formula, kind: type) -> List[Formula]:
    """
    Flatten nested `kind` (`And` or `Or`) nodes into their operands.
    """
    if isinstance(f, kind):
        return operands(f.left, kind) + operands(f.right, kind)
    return [f]


def _combine(formulas: Iterable[Formula], kind: type) -> Formula:
    flat = set()
    for f in formulas:
        flat.update(operands(f, kind))
    ordered = sorted(flat, key=formula_key)
    if not ordered:
        return TOP
    result = ordered[0]
    for f in ordered[1:]:
        result = kind(result, f)
    return result


def conjoin(formulas: Iterable[Formula]) -> Formula:
    """
    Canonical conjunction: operands flattened, deduplicated and sorted.
    The empty conjunction is `TOP`.
    """
    return _combine(formulas, And)


def disjoin(formulas: Iterable[Formula]) -> Formula:
    """
    Canonical disjunction with duplicate operands merged. Empty input gives `TOP`.
    """
    return _combine(formulas, Or)


def bounds(f: Formula) -> Tuple[Fraction, ...]:
    """Diamond bounds of `f` in pre-order."""
    if isinstance(f, Top):
        return ()
    if isinstance(f, Neg):
        return bounds(f.body)
    if isinstance(f, (And, Or)):
        return bounds(f.left) + bounds(f.right)
    return (f.bound,) + bounds(f.body)


def skeleton(f: Formula) -> tuple:
    """
    The shape of `f` with every probability bound erased.
    """
    if isinstance(f, Top):
        return ("T",)
    if isinstance(f, Neg):
        return ("N", skeleton(f.body))
    if isinstance(f, And):
        return ("A", skeleton(f.left), skeleton(f.right))
    if isinstance(f, Or):
        return ("O", skeleton(f.left), skeleton(f.right))
    return ("D", f.action, skeleton(f.body))


def is_connective_free(f: Formula) -> bool:
    """True when `f` is built from diamonds and `TOP` only."""
    while isinstance(f, Diamond):
        f = f.body
    return isinstance(f, Top)
