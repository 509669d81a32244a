import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Tuple

import pandas as pd

from rpbis.model.dist import Dist
from rpbis.model.rplts import Rplts

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Partition:
    """
    Partition of the states of a system into disjoint blocks.

    Blocks are numbered by their least state name.

    Parameters
    ----------
    blocks : `tuple` of `frozenset`
        Non-empty, pairwise disjoint blocks covering all states.
    """
    blocks: Tuple[FrozenSet[str], ...]

    def __post_init__(self):
        ordered = tuple(sorted((frozenset(b) for b in self.blocks), key=min))
        object.__setattr__(self, "blocks", ordered)
        object.__setattr__(self, "_block_of", {
            state: index for index, block in enumerate(ordered) for state in block})

    @property
    def block_of(self) -> Dict[str, int]:
        return dict(self._block_of)

    def index(self, state: str) -> int:
        return self._block_of[state]

    def __len__(self):
        return len(self.blocks)

    def to_frame(self) -> pd.DataFrame:
        """
        Partition in a pandas DataFrame format, one row per state.
        """
        rows = [(state, index, min(block))
                for index, block in enumerate(self.blocks) for state in sorted(block)]
        return pd.DataFrame(rows, columns=["state", "block", "representative"]).set_index("state")


def _block_masses(dist: Dist, block_of: Dict[str, int]) -> Tuple[Tuple[int, Fraction], ...]:
    masses: Dict[int, Fraction] = {}
    for state, prob in dist.items():
        block = block_of[state]
        masses[block] = masses.get(block, Fraction(0)) + prob
    return tuple(sorted(masses.items()))


def bisim_partition(system: Rplts) -> Partition:
    """
    Coarsest probabilistic bisimulation of `system` by signature refinement.

    The initial partition groups states by enabled actions. Each round splits
    blocks by the per-action vector of block masses until nothing changes.

    Parameters
    ----------
    system : `Rplts`

    Returns
    -------
    partition : `Partition`
    """
    # Start from the enabled action sets
    block_of: Dict[str, int] = {}
    initial: Dict[Tuple[str, ...], int] = {}
    for state in system.states:
        block_of[state] = initial.setdefault(system.enabled(state), len(initial))

    rounds = 0
    while True:
        rounds += 1
        signatures: Dict[tuple, int] = {}
        refined: Dict[str, int] = {}
        for state in system.states:
            signature = (block_of[state],) + tuple(
                (action, _block_masses(system.dist(state, action), block_of))
                for action in system.enabled(state))
            refined[state] = signatures.setdefault(signature, len(signatures))

        stable = len(signatures) == len(set(block_of.values()))
        block_of = refined
        if stable:
            break

    blocks: Dict[int, set] = {}
    for state, block in block_of.items():
        blocks.setdefault(block, set()).add(state)

    _logger.debug("refinement stable after %d rounds with %d blocks", rounds, len(blocks))
    return Partition(tuple(frozenset(b) for b in blocks.values()))


def bisimilar(system: Rplts, s1: str, s2: str) -> bool:
    """
    True iff `s1` and `s2` are probabilistically bisimilar in `system`.
    """
    system.check_state(s1)
    system.check_state(s2)
    if s1 == s2:
        return True
    partition = bisim_partition(system)
    return partition.index(s1) == partition.index(s2)


def quotient(system: Rplts, partition: Partition = None) -> Rplts:
    """
    Lumped system with one state per block, named by the block's least state.

    Parameters
    ----------
    system : `Rplts`

    partition : `Partition`, (optional)
        Defaults to the coarsest bisimulation of `system`.

    Returns
    -------
    lumped : `Rplts`
    """
    if partition is None:
        partition = bisim_partition(system)

    names = [min(block) for block in partition.blocks]
    trans = {}
    for index, block in enumerate(partition.blocks):
        representative = names[index]
        for action in system.enabled(representative):
            masses = _block_masses(system.dist(representative, action), partition._block_of)
            trans[(representative, action)] = Dist((names[b], mass) for b, mass in masses)

    return Rplts(names, trans)
