from collections.abc import Mapping
from fractions import Fraction
from typing import Iterable, Tuple

from rpbis.model.base import model_base
from rpbis.utils.rational_tools import as_prob, render_prob


class Dist(Mapping, model_base):
    """
    Finitely supported probability distribution over state names.

    Only strictly positive entries are stored, so the keys are the support.
    Instances are immutable and hashable; build them with `make_dist`.
    """

    __slots__ = ("_entries", "_index", "_hash")

    def __init__(self, entries: Iterable[Tuple[str, Fraction]]):
        self._entries = tuple(sorted(entries))
        self._index = dict(self._entries)
        self._hash = hash(self._entries)

    def __getitem__(self, state):
        return self._index[state]

    def get(self, state, default=Fraction(0)):
        return super().get(state, default)

    def __iter__(self):
        return (key for key, _ in self._entries)

    def __len__(self):
        return len(self._entries)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if isinstance(other, Dist):
            return self._entries == other._entries
        return NotImplemented

    def __repr__(self):
        body = ", ".join(f"{render_prob(p)}: {s}" for s, p in self._entries)
        return f"Dist{{{body}}}"

    @property
    def support(self) -> frozenset:
        return frozenset(self)

    def items(self):
        return self._entries


def make_dist(pairs) -> Dist:
    """
    Build a distribution from (state, probability) pairs.

    Duplicate states have their probabilities summed and zero entries are
    dropped.

    Parameters
    ----------
    pairs : `list` of (`str`, probability)
        Probabilities may be `int`, `Fraction` or rational literal strings.

    Returns
    -------
    dist : `Dist`
    """
    pairs = [(state, as_prob(prob)) for state, prob in pairs]
    Dist._check_pairs(pairs)

    # Merge duplicated targets
    merged = {}
    for state, prob in pairs:
        merged[state] = merged.get(state, Fraction(0)) + prob

    Dist._check_total(sum(merged.values(), Fraction(0)))
    return Dist((state, prob) for state, prob in merged.items() if prob > 0)


def dist_mass(d: Dist, states) -> Fraction:
    """
    Exact mass that `d` assigns to a set of states.
    """
    return sum((prob for state, prob in d.items() if state in states), Fraction(0))
