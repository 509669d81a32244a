from fractions import Fraction

from rpbis.parser import parse_formula
from rpbis.rpt import unfold


def tree(system, state, n=None):
    """Canonical tree of `state` pruned at `n` (default: number of states)."""
    return unfold(system, state, len(system) if n is None else n)


def child(t, action, weight):
    """The unique child of `t` reached under `action` with `weight`."""
    matches = [c for c, w in t.successors(action) if w == Fraction(weight)]
    assert len(matches) == 1, f"{len(matches)} children with weight {weight}"
    return matches[0]


def child_with(t, action, *enabled):
    """The unique child of `t` under `action` whose enabled actions are `enabled`."""
    matches = [c for c, _ in t.successors(action) if c.init() == tuple(enabled)]
    assert len(matches) == 1, f"{len(matches)} children enabling {enabled}"
    return matches[0]


def formulas(*texts):
    return frozenset(parse_formula(text) for text in texts)
