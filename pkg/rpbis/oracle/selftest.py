"""
Randomised property suite behind ``rpbis selftest``.

Each case draws a system from its own seed and checks every pair of states:
the canonical trees agree with the partition, the synthesised formula of each
logic exists exactly for non-bisimilar pairs, lies in its fragment, separates
the pair and stays within the least differing pruning level. Negation-free
steps that had to fall back past the candidate of least (or greatest)
Phi-set size are flagged, together with whether the candidate used is minimal
by inclusion.
"""

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Tuple

import pandas as pd

from rpbis.bisim.partition import bisim_partition
from rpbis.exceptions import RpbisError
from rpbis.logic.formula import LogicId, depth, in_fragment
from rpbis.logic.semantics import sat_state
from rpbis.model.rplts import Rplts
from rpbis.oracle.generator import GenParams, case_seed, random_rplts
from rpbis.rpt.ops import first_difference, semantic_eq, unfold
from rpbis.synth.distinguish import explain_states
from rpbis.utils import settings

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CaseResult:
    """Outcome of one random system."""
    index: int
    seed: int
    num_states: int
    records: Tuple[dict, ...] = ()
    failures: Tuple[str, ...] = ()
    flags: Tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def flagged(self) -> bool:
        return bool(self.flags)


@dataclass(frozen=True)
class SelftestResult:
    """
    Outcome of a self-test run.

    Parameters
    ----------
    seed : `int`
        Base seed of the run.

    cases : `list` of `CaseResult`
        Ordered by case index.
    """
    seed: int
    cases: List[CaseResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases)

    @property
    def failing_seeds(self) -> List[int]:
        return [case.seed for case in self.cases if not case.passed]

    @property
    def flagged_seeds(self) -> List[int]:
        """Seeds of cases where a negation-free step needed a fallback candidate."""
        return [case.seed for case in self.cases if case.flagged]

    @property
    def summary(self) -> pd.DataFrame:
        """
        One row per logic: pairs checked, pairs distinguished, deepest formula,
        failures, fallback steps and fallbacks onto a candidate whose Phi-set
        is not minimal by inclusion.
        """
        columns = ["logic", "pairs", "distinguished", "max_depth", "failures", "fallbacks",
                   "non_minimal"]
        records = [r for case in self.cases for r in case.records]
        if not records:
            return pd.DataFrame(columns=columns).set_index("logic")
        frame = pd.DataFrame.from_records(records)
        return frame.groupby("logic").agg(
            pairs=("distinguished", "size"),
            distinguished=("distinguished", "sum"),
            max_depth=("depth", "max"),
            failures=("failed", "sum"),
            fallbacks=("fallbacks", "sum"),
            non_minimal=("non_minimal", "sum"),
        )


def _check_levels(system: Rplts, s1: str, s2: str, level, failures: List[str]):
    # Prunings agree strictly below the first differing level and differ from there on
    top = len(system)
    for n in range(0, top + 1):
        same = unfold(system, s1, n) is unfold(system, s2, n)
        expected = level is None or n < level
        if same != expected:
            failures.append(f"{s1},{s2}: prunings at level {n} break stabilisation (first difference {level})")
            return


def _check_pair(system: Rplts, s1: str, s2: str, same_block: bool, records: List[dict],
                failures: List[str], flags: List[str]):
    if semantic_eq(system, s1, s2) != same_block:
        failures.append(f"{s1},{s2}: canonical trees disagree with the partition")

    level = first_difference(system, s1, s2)
    _check_levels(system, s1, s2, level, failures)

    for logic in LogicId:
        failed = False
        found = None
        try:
            found = explain_states(system, s1, s2, logic)
        except RpbisError as err:
            failures.append(f"{s1},{s2} [{logic.value}]: {type(err).__name__}: {err}")
            failed = True
        f = None if found is None else found.formula

        if not failed and (f is None) != same_block:
            failures.append(f"{s1},{s2} [{logic.value}]: formula present {f is not None}, "
                            f"bisimilar {same_block}")
            failed = True
        elif not failed and f is not None:
            if not in_fragment(f, logic):
                failures.append(f"{s1},{s2} [{logic.value}]: formula outside its fragment")
                failed = True
            if sat_state(system, s1, f) == sat_state(system, s2, f):
                failures.append(f"{s1},{s2} [{logic.value}]: formula does not separate")
                failed = True
            if level is not None and depth(f) > level:
                failures.append(f"{s1},{s2} [{logic.value}]: depth {depth(f)} exceeds level {level}")
                failed = True

        fallbacks = () if found is None else found.fallbacks
        for step in fallbacks:
            flags.append(f"{s1},{s2} [{logic.value}]: candidate {step.attempt} under "
                         f"{step.action!r} after the preferred one had no witness "
                         f"(minimal by inclusion: {step.subset_minimal})")

        records.append({
            "logic": logic.value,
            "distinguished": f is not None,
            "depth": depth(f) if f is not None else 0,
            "failed": failed,
            "fallbacks": len(fallbacks),
            "non_minimal": sum(step.subset_minimal is False for step in fallbacks),
        })


def check_system(system: Rplts) -> Tuple[List[dict], List[str], List[str]]:
    """
    Check every pair of states of `system`.

    Returns
    -------
    records : `list` of `dict`
        One row per pair and logic.

    failures : `list` of `str`
        Violated properties.

    flags : `list` of `str`
        Fallback steps of the negation-free syntheses. They do not fail a case.
    """
    partition = bisim_partition(system)
    records: List[dict] = []
    failures: List[str] = []
    flags: List[str] = []
    for s1, s2 in itertools.combinations(system.states, 2):
        _check_pair(system, s1, s2, partition.index(s1) == partition.index(s2),
                    records, failures, flags)
    return records, failures, flags


def run_case(index: int, base_seed: int, params: GenParams) -> CaseResult:
    """
    Check every pair of states of the system drawn for case `index`.
    """
    seed = case_seed(base_seed, index)
    system = random_rplts(params.with_seed(seed))
    records, failures, flags = check_system(system)

    if failures:
        _logger.warning("case %d (seed %d) failed: %s", index, seed, failures[0])
    if flags:
        _logger.info("case %d (seed %d) flagged: %s", index, seed, flags[0])
    return CaseResult(index, seed, len(system), tuple(records), tuple(failures), tuple(flags))


def run_selftest(cases: int = settings.DEFAULT_CASES, seed: int = None, params: GenParams = None,
                 workers: int = settings.DEFAULT_WORKERS) -> SelftestResult:
    """
    Run the randomised property suite.

    Parameters
    ----------
    cases : `int`, (optional)
        Number of random systems. Zero passes vacuously.

    seed : `int`, (optional)
        Base seed; every case derives its own. Defaults to `settings.default_seed()`.

    params : `GenParams`, (optional)
        Generator bounds; its own seed is ignored.

    workers : `int`, (optional)
        Worker threads. Results are merged by case index whatever the number.

    Returns
    -------
    result : `SelftestResult`
    """
    if cases < 0:
        raise ValueError("cases must be non-negative")
    if workers < 1:
        raise ValueError("workers must be at least 1")
    if seed is None:
        seed = settings.default_seed()
    if params is None:
        params = GenParams(seed=seed)

    _logger.info("running %d cases from seed %d on %d workers", cases, seed, workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(lambda i: run_case(i, seed, params), range(cases)))

    return SelftestResult(seed, results)
