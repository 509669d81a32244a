import logging
from typing import Dict, Iterator, Optional, Tuple

from rpbis.model.base import NIL_STATE, model_base
from rpbis.model.dist import Dist, make_dist

_logger = logging.getLogger(__name__)


class Rplts(model_base):
    """
    Reactive probabilistic labeled transition system.

    Every (state, action) pair has at most one target distribution. Use
    `validate_rplts` (or the text parser) to build instances from raw data.

    Parameters
    ----------
    states : iterable of `str`
        All state names, including terminal ones.

    trans : `dict` of (`str`, `str`) -> `Dist`
        Already validated transitions.
    """

    __slots__ = ("_states", "_actions", "_trans", "_enabled")

    def __init__(self, states, trans: Dict[Tuple[str, str], Dist]):
        self._states = tuple(sorted(set(states)))
        self._trans = dict(sorted(trans.items()))
        self._actions = tuple(sorted({action for _, action in self._trans}))

        enabled = {state: [] for state in self._states}
        for state, action in self._trans:
            enabled[state].append(action)
        self._enabled = {state: tuple(acts) for state, acts in enabled.items()}

    @property
    def states(self) -> Tuple[str, ...]:
        return self._states

    @property
    def actions(self) -> Tuple[str, ...]:
        return self._actions

    @property
    def trans(self) -> Dict[Tuple[str, str], Dist]:
        return dict(self._trans)

    def __len__(self):
        return len(self._states)

    def __contains__(self, state):
        return state in self._enabled

    def __eq__(self, other):
        if isinstance(other, Rplts):
            return self._states == other._states and self._trans == other._trans
        return NotImplemented

    def __hash__(self):
        return hash((self._states, tuple(self._trans.items())))

    def __repr__(self):
        return f"Rplts(states={len(self._states)}, transitions={len(self._trans)})"

    def check_state(self, state: str) -> str:
        return self._check_state(state, self._enabled)

    def enabled(self, state: str) -> Tuple[str, ...]:
        """Sorted actions with an outgoing transition from `state`."""
        return self._enabled[self.check_state(state)]

    def dist(self, state: str, action: str) -> Optional[Dist]:
        return self._trans.get((self.check_state(state), action))

    def transitions(self) -> Iterator[Tuple[str, str, Dist]]:
        for (state, action), dist in self._trans.items():
            yield state, action, dist


def validate_rplts(raw, states=None) -> Rplts:
    """
    Validate raw transitions and build an `Rplts`.

    Parameters
    ----------
    raw : `list` of (`str`, `str`, `list` of (`str`, probability))
        Source state, action and target pairs of every transition.

    states : iterable of `str`, (optional)
        Explicit state set. When given, every source and target must belong
        to it; otherwise the states are read off the transitions.

    Returns
    -------
    system : `Rplts`
    """
    declared = None if states is None else set(states)
    known = set() if declared is None else set(declared)
    trans = {}

    for source, action, pairs in raw:
        Rplts._check_not_reserved(source)
        dist = make_dist(pairs)

        # Check that all the states involved are known
        if declared is not None:
            Rplts._check_state(source, declared)
            for target in dist:
                Rplts._check_state(target, declared)
        else:
            known.add(source)
            known.update(dist)

        trans[(source, action)] = Rplts._check_deterministic(
            (source, action), trans, dist)

    if NIL_STATE in known:
        _logger.debug("system references the reserved %r state", NIL_STATE)

    system = Rplts(known, trans)
    _logger.debug("validated %r", system)
    return system
