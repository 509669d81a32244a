"""
Reactive probabilistic trees.

`Rpt` nodes are hash-consed: structurally equal trees are the same object,
so equality is identity and hashing is constant time. `RawTree` is the
non-extensional shape produced by truncation.
"""

import threading
import weakref
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Tuple

Succ = Tuple[Tuple[str, Tuple[Tuple["Rpt", Fraction], ...]], ...]


class Rpt:
    """
    Canonical reactive probabilistic tree node.

    Do not instantiate directly: use `Rpt.make` (or `NIL`). For every action
    the children are distinct trees with positive weights summing to one,
    stored in canonical order.
    """

    __slots__ = ("_succ", "_hash", "_key", "_height", "__weakref__")

    _table: "weakref.WeakValueDictionary[Succ, Rpt]" = weakref.WeakValueDictionary()
    _lock = threading.Lock()

    def __init__(self, succ: Succ):
        self._succ = succ
        self._hash = hash(succ)
        self._key = None
        self._height = None

    @classmethod
    def make(cls, succ: Mapping[str, Iterable[Tuple["Rpt", Fraction]]]) -> "Rpt":
        """
        Intern the node with the given successors.

        Equal children under one action are merged by summing their weights,
        which is the collapse step of pruning.

        Parameters
        ----------
        succ : `dict` of `str` -> iterable of (`Rpt`, `Fraction`)
            Children per action. Actions mapped to no children are dropped.

        Returns
        -------
        node : `Rpt`
        """
        normal = []
        for action in sorted(succ):
            merged: Dict[Rpt, Fraction] = {}
            for child, weight in succ[action]:
                if weight <= 0:
                    raise ValueError(f"non-positive weight {weight} under {action!r}")
                merged[child] = merged.get(child, Fraction(0)) + weight
            if not merged:
                continue
            if sum(merged.values()) != 1:
                raise ValueError(f"weights under {action!r} do not sum to 1")
            children = sorted(merged.items(), key=lambda item: (item[0].sort_key, item[1]))
            normal.append((action, tuple(children)))

        key = tuple(normal)
        with cls._lock:
            node = cls._table.get(key)
            if node is None:
                node = cls(key)
                cls._table[key] = node
        return node

    @property
    def succ(self) -> Succ:
        return self._succ

    @property
    def sort_key(self) -> tuple:
        """Nested tuple giving the canonical total order on trees."""
        if self._key is None:
            self._key = tuple(
                (action, tuple((child.sort_key, weight) for child, weight in children))
                for action, children in self._succ)
        return self._key

    @property
    def height(self) -> int:
        if self._height is None:
            self._height = max(
                (1 + child.height for _, children in self._succ for child, _ in children),
                default=0)
        return self._height

    @property
    def is_nil(self) -> bool:
        return not self._succ

    def init(self) -> Tuple[str, ...]:
        """Actions enabled at the root."""
        return tuple(action for action, _ in self._succ)

    def successors(self, action: str) -> Tuple[Tuple["Rpt", Fraction], ...]:
        for label, children in self._succ:
            if label == action:
                return children
        return ()

    def weight(self, action: str, child: "Rpt") -> Fraction:
        for node, weight in self.successors(action):
            if node is child:
                return weight
        return Fraction(0)

    def children(self) -> Iterable["Rpt"]:
        for _, children in self._succ:
            for child, _ in children:
                yield child

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return self is other

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    def __repr__(self):
        if self.is_nil:
            return "Rpt(nil)"
        return f"Rpt(height={self.height}, init={list(self.init())})"


NIL = Rpt.make({})


class RawTree:
    """
    Tree with positive per-action weights summing to one that may list equal
    children several times under one action.
    """

    __slots__ = ("succ",)

    def __init__(self, succ: Tuple[Tuple[str, Tuple[Tuple["RawTree", Fraction], ...]], ...] = ()):
        self.succ = succ

    @property
    def is_nil(self) -> bool:
        return not self.succ

    def successors(self, action: str) -> Tuple[Tuple["RawTree", Fraction], ...]:
        for label, children in self.succ:
            if label == action:
                return children
        return ()

    def __repr__(self):
        return f"RawTree(actions={[action for action, _ in self.succ]})"


RAW_NIL = RawTree()


def check_tree(t: Rpt, _seen: Optional[set] = None) -> Rpt:
    """
    Debug validator: raise `AssertionError` unless every node of `t` has
    positive weights summing to one per action and distinct siblings.
    """
    seen = set() if _seen is None else _seen
    if t in seen:
        return t
    seen.add(t)
    for action, children in t.succ:
        assert children, f"empty successor set under {action!r}"
        assert all(weight > 0 for _, weight in children), "non-positive weight"
        assert sum(weight for _, weight in children) == 1, f"weights under {action!r} do not sum to 1"
        nodes = [child for child, _ in children]
        assert len(set(map(id, nodes))) == len(nodes), "equal siblings are not collapsed"
        for child in nodes:
            check_tree(child, seen)
    return t
