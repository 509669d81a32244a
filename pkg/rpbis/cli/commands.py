"""
Command implementations behind the ``rpbis`` executable. Each returns a value;
printing and exit codes are left to `rpbis.cli.main`.
"""

import logging
import time
from contextlib import contextmanager
from typing import Dict

from rpbis.bisim.partition import Partition, bisim_partition, bisimilar
from rpbis.cli.report import BISIMILAR, DISTINGUISHED, Report
from rpbis.fixtures import FIXTURES, load_fixture
from rpbis.logic.formula import LogicId
from rpbis.logic.semantics import sat_state
from rpbis.model.rplts import Rplts
from rpbis.oracle.generator import GenParams
from rpbis.oracle.selftest import SelftestResult, run_selftest
from rpbis.parser.formula_parser import parse_formula
from rpbis.parser.render import render_formula
from rpbis.parser.system_parser import read_system
from rpbis.rpt.ops import unfold
from rpbis.rpt.render import render_dot, render_tree
from rpbis.synth.distinguish import explain_states

_logger = logging.getLogger(__name__)

FIXTURE_PREFIX = "fixture:"


@contextmanager
def _timed(timings: Dict[str, float], phase: str):
    start = time.perf_counter()
    try:
        yield
    finally:
        timings[phase] = round((time.perf_counter() - start) * 1000, 3)


def load_system(path: str) -> Rplts:
    """
    Read a system file, or a shipped fixture when `path` is ``fixture:<name>``.
    """
    if path.startswith(FIXTURE_PREFIX):
        name = path[len(FIXTURE_PREFIX):]
        if name not in FIXTURES:
            raise FileNotFoundError(f"no fixture named {name!r} (have {', '.join(FIXTURES)})")
        return load_fixture(name)
    return read_system(path)


def cmd_bisim(path: str, s1: str, s2: str) -> Report:
    timings: Dict[str, float] = {}
    with _timed(timings, "parse"):
        system = load_system(path)
    with _timed(timings, "bisim"):
        verdict = BISIMILAR if bisimilar(system, s1, s2) else DISTINGUISHED
    return Report(verdict, timings_ms=timings)


def cmd_distinguish(path: str, s1: str, s2: str, logic: LogicId, decimal: bool = False) -> Report:
    """
    Distinguishing formula of two states of the system at `path`.

    Parameters
    ----------
    path : `str`

    s1, s2 : `str`

    logic : `LogicId`

    decimal : `bool`, (optional)
        Render terminating bounds as decimals.

    Returns
    -------
    report : `Report`
    """
    timings: Dict[str, float] = {}
    with _timed(timings, "parse"):
        system = load_system(path)
    with _timed(timings, "synth"):
        found = explain_states(system, s1, s2, logic)

    if found is None:
        return Report(BISIMILAR, logic=logic.value, timings_ms=timings)

    _logger.info("%s formula of depth %d at level %d", logic.value, found.depth, found.minimal_level)
    return Report(DISTINGUISHED,
                  formula=render_formula(found.formula, decimal),
                  logic=logic.value,
                  depth=found.depth,
                  minimal_level=found.minimal_level,
                  satisfied_by=found.satisfied_by,
                  timings_ms=timings)


def cmd_check(path: str, state: str, formula: str) -> bool:
    system = load_system(path)
    return sat_state(system, state, parse_formula(formula))


def cmd_canon(path: str, state: str, depth: int = None, dot: bool = False,
              decimal: bool = False) -> str:
    """
    Canonical tree of `state` pruned at `depth` (default ``|S|``).
    """
    system = load_system(path)
    if depth is None:
        depth = len(system)
    tree = unfold(system, state, depth)
    return render_dot(tree, decimal) if dot else render_tree(tree, decimal)


def cmd_partition(path: str) -> Partition:
    return bisim_partition(load_system(path))


def cmd_selftest(cases: int, seed: int = None, workers: int = 1,
                 params: GenParams = None) -> SelftestResult:
    return run_selftest(cases=cases, seed=seed, params=params, workers=workers)
