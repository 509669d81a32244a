import logging
from typing import Dict, Tuple

from rpbis.model.rplts import Rplts
from rpbis.rpt.tree import NIL, RAW_NIL, RawTree, Rpt

_logger = logging.getLogger(__name__)


def unfold_raw(system: Rplts, state: str, n: int) -> RawTree:
    """
    Depth-`n` syntactic unfolding of the transition graph from `state`.

    Shared (state, remaining depth) pairs are built once, so the result is a
    DAG of size at most ``n * |S|`` nodes.
    """
    system.check_state(state)
    if n < 0:
        raise ValueError("unfolding depth must be non-negative")

    memo: Dict[Tuple[str, int], RawTree] = {}

    def build(current: str, k: int) -> RawTree:
        if k == 0:
            return RAW_NIL
        key = (current, k)
        if key not in memo:
            succ = []
            for action in system.enabled(current):
                dist = system.dist(current, action)
                succ.append((action, tuple((build(t, k - 1), p) for t, p in dist.items())))
            memo[key] = RawTree(tuple(succ))
        return memo[key]

    return build(state, n)


def collapse(t: RawTree) -> Rpt:
    """
    Merge equal sibling subtrees bottom-up, summing their weights.

    Parameters
    ----------
    t : `RawTree`

    Returns
    -------
    tree : `Rpt`
    """
    memo: Dict[int, Rpt] = {}

    def go(node: RawTree) -> Rpt:
        if node.is_nil:
            return NIL
        found = memo.get(id(node))
        if found is None:
            found = Rpt.make({
                action: [(go(child), weight) for child, weight in children]
                for action, children in node.succ})
            memo[id(node)] = found
        return found

    return go(t)


def truncate(t: Rpt, n: int) -> RawTree:
    """
    Replace every subtree below depth `n` by nil, without collapsing.
    """
    if n < 0:
        raise ValueError("truncation depth must be non-negative")

    memo: Dict[Tuple[Rpt, int], RawTree] = {}

    def go(node: Rpt, k: int) -> RawTree:
        if k == 0 or node.is_nil:
            return RAW_NIL
        key = (node, k)
        if key not in memo:
            memo[key] = RawTree(tuple(
                (action, tuple((go(child, k - 1), weight) for child, weight in children))
                for action, children in node.succ))
        return memo[key]

    return go(t, n)


def prune(t: Rpt, n: int) -> Rpt:
    """Pruning at level `n`: collapse of the truncation."""
    if n >= t.height:
        return t
    return collapse(truncate(t, n))


def unfold(system: Rplts, state: str, n: int) -> Rpt:
    """
    Canonical tree of `state` pruned at level `n`.

    Parameters
    ----------
    system : `Rplts`

    state : `str`

    n : `int`
        Pruning level; ``unfold(system, s, 0)`` is nil.

    Returns
    -------
    tree : `Rpt`
        Height at most `n`.
    """
    return collapse(unfold_raw(system, state, n))


def height(t: Rpt) -> int:
    return t.height


def rpt_equal(t1: Rpt, t2: Rpt) -> bool:
    """Tree isomorphism, which on hash-consed trees is identity."""
    return t1 is t2


def semantic_eq(system: Rplts, s1: str, s2: str) -> bool:
    """
    Prune equality at every level, decided at level ``|S|``.
    """
    system.check_state(s1)
    system.check_state(s2)
    level = len(system)
    return rpt_equal(unfold(system, s1, level), unfold(system, s2, level))


def first_difference(system: Rplts, s1: str, s2: str):
    """
    Least level ``n`` in ``1..|S|`` at which the prunings of `s1` and `s2`
    differ, or None when they never do.
    """
    system.check_state(s1)
    system.check_state(s2)
    for n in range(1, len(system) + 1):
        if not rpt_equal(unfold(system, s1, n), unfold(system, s2, n)):
            _logger.debug("%s and %s first differ at level %d", s1, s2, n)
            return n
    return None
