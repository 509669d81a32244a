"""
Randomised checks of the characterisation results over generated systems.
Seeds are fixed so failures reproduce; the larger suites are marked slow.
"""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rpbis.bisim import bisim_partition, bisimilar
from rpbis.logic import LogicId, depth, sat_state, sat_tree
from rpbis.oracle import (GenParams, case_seed, enum_formulas,
                          logical_eq_bruteforce, random_rplts, run_selftest)
from rpbis.rpt import semantic_eq, unfold
from rpbis.synth import distinguish_states

SUITE_SEED = 20150601


def systems(count, base_seed=SUITE_SEED, **bounds):
    for index in range(count):
        yield random_rplts(GenParams(seed=case_seed(base_seed, index), **bounds))


@given(seed=st.integers(min_value=0, max_value=2**32 - 1))
@settings(max_examples=40, deadline=None)
def test_formulas_only_see_their_depth(seed):
    system = random_rplts(GenParams(max_states=4, seed=seed))
    for f in enum_formulas(system, LogicId.PML_NEG_AND, 2):
        for state in system.states:
            assert sat_tree(unfold(system, state, depth(f)), f) == sat_state(system, state, f)


@given(seed=st.integers(min_value=0, max_value=2**32 - 1))
@settings(max_examples=40, deadline=None)
def test_synthesised_formulas_separate(seed):
    system = random_rplts(GenParams(max_states=5, seed=seed))
    partition = bisim_partition(system)
    for s1, s2 in itertools.combinations(system.states, 2):
        for logic in LogicId:
            f = distinguish_states(system, s1, s2, logic)
            if partition.index(s1) == partition.index(s2):
                assert f is None
            else:
                assert sat_state(system, s1, f) != sat_state(system, s2, f)


@pytest.mark.slow
def test_selftest_suite():
    result = run_selftest(cases=1000, seed=SUITE_SEED, workers=4)
    assert result.passed, result.failing_seeds
    assert len(result.cases) == 1000


@pytest.mark.slow
def test_canonical_trees_decide_bisimilarity():
    for system in systems(500):
        for s1, s2 in itertools.combinations(system.states, 2):
            assert semantic_eq(system, s1, s2) == bisimilar(system, s1, s2)


@pytest.mark.slow
@pytest.mark.parametrize("logic", list(LogicId))
def test_every_logic_characterises_bisimilarity(logic):
    for system in systems(200, max_states=5, denominator_bound=6):
        for s1, s2 in itertools.combinations(system.states, 2):
            assert logical_eq_bruteforce(system, s1, s2, logic) == bisimilar(system, s1, s2)
