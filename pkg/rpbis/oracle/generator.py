import logging
import string
from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from rpbis.model.rplts import Rplts, validate_rplts
from rpbis.utils import settings

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GenParams:
    """
    Parameters of the random system generator.

    Parameters
    ----------
    max_states : `int`, (optional)
        The number of states is drawn from ``1..max_states``.

    max_actions : `int`, (optional)
        The alphabet is the first ``1..max_actions`` lowercase letters.

    max_branching : `int`, (optional)
        Largest support drawn for a single distribution.

    denominator_bound : `int`, (optional)
        Every probability is a multiple of ``1/d`` with ``d <= denominator_bound``.

    seed : `int`, (optional)
        Seed of the numpy generator. Defaults to `settings.default_seed()`.

    enable_prob : `float`, (optional)
        Chance that a given (state, action) pair has a transition. Only
        steers the generator; the drawn probabilities stay exact.
    """
    max_states: int = 6
    max_actions: int = 3
    max_branching: int = 2
    denominator_bound: int = 8
    seed: int = None
    enable_prob: float = 0.6

    def __post_init__(self):
        if self.seed is None:
            object.__setattr__(self, "seed", settings.default_seed())
        self._check_bounds()

    def _check_bounds(self):
        # Ensure all bounds are positive
        for name in ("max_states", "max_actions", "max_branching", "denominator_bound"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1")

        if self.max_actions > len(string.ascii_lowercase):
            raise ValueError(f"max_actions cannot exceed {len(string.ascii_lowercase)}")

        if not 0 <= self.enable_prob <= 1:
            raise ValueError("enable_prob must lie in [0, 1]")

    def with_seed(self, seed: int) -> "GenParams":
        return replace(self, seed=seed)


def case_seed(base_seed: int, index: int) -> int:
    """Independent 64-bit seed for case `index` of a run seeded with `base_seed`."""
    state = np.random.SeedSequence([base_seed, index]).generate_state(2, dtype=np.uint32)
    return int(state[0]) << 32 | int(state[1])


def _split(rng: np.random.Generator, denominator: int, parts: int):
    # Random composition of the denominator into positive parts
    if parts == 1:
        return [denominator]
    cuts = np.sort(rng.choice(np.arange(1, denominator), size=parts - 1, replace=False))
    bounds = [0] + [int(c) for c in cuts] + [denominator]
    return [b - a for a, b in zip(bounds, bounds[1:])]


def random_rplts(params: GenParams) -> Rplts:
    """
    Random system drawn deterministically from ``params.seed``.

    Parameters
    ----------
    params : `GenParams`

    Returns
    -------
    system : `Rplts`
        States are ``s0, s1, ...``; duplicate targets of one distribution are merged.
    """
    rng = np.random.default_rng(params.seed)
    num_states = int(rng.integers(1, params.max_states + 1))
    num_actions = int(rng.integers(1, params.max_actions + 1))
    states = [f"s{i}" for i in range(num_states)]
    actions = string.ascii_lowercase[:num_actions]

    raw = []
    for state in states:
        for action in actions:
            if rng.random() >= params.enable_prob:
                continue
            denominator = int(rng.integers(1, params.denominator_bound + 1))
            parts = min(int(rng.integers(1, params.max_branching + 1)), denominator)
            targets = rng.integers(0, num_states, size=parts)
            weights = _split(rng, denominator, parts)
            raw.append((state, action, [(states[int(t)], Fraction(w, denominator))
                                        for t, w in zip(targets, weights)]))

    system = validate_rplts(raw, states=states)
    _logger.debug("generated %r from seed %d", system, params.seed)
    return system
