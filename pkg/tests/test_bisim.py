from fractions import Fraction

import pytest

from rpbis.bisim import Partition, bisim_partition, bisimilar, quotient
from rpbis.exceptions import UnknownStateError
from rpbis.fixtures import FIXTURES, load_fixture
from rpbis.model import dist_mass
from rpbis.oracle import GenParams, case_seed, random_rplts
from rpbis.parser import parse_system


def test_fixture_a_roots_differ(fixture_a):
    assert not bisimilar(fixture_a, "t1", "t2")
    assert bisimilar(fixture_a, "t1", "t1")


def test_fixture_c_roots_differ(fixture_c):
    assert not bisimilar(fixture_c, "t5", "t6")
    # Both terminal leaves land in one block
    assert bisimilar(fixture_c, "w_nil", "nil")


def test_lumping_by_block_mass():
    system = parse_system("""
        s -a-> { 1/2: u, 1/2: v }
        t -a-> { 1: w }
        u -b-> { 1: nil }
        v -b-> { 1: nil }
        w -b-> { 1: nil }
    """)
    assert bisimilar(system, "s", "t")
    assert bisimilar(system, "u", "w")


def test_probabilities_matter():
    system = parse_system("""
        s -a-> { 1/2: u, 1/2: nil }
        t -a-> { 1/3: u, 2/3: nil }
        u -b-> { 1: nil }
    """)
    assert not bisimilar(system, "s", "t")


def test_unknown_state(fixture_a):
    with pytest.raises(UnknownStateError):
        bisimilar(fixture_a, "t1", "nope")


def test_partition_blocks(fixture_f):
    partition = bisim_partition(fixture_f)
    # t11, t12, t13 pairwise different; z_b alone; nil alone
    assert len(partition) == 5
    assert sorted(partition.blocks, key=min) == list(partition.blocks)
    frame = partition.to_frame()
    assert set(frame.index) == set(fixture_f.states)
    assert frame.loc["t12", "representative"] == "t12"


def test_partition_frame_groups_states():
    system = parse_system("""
        s -a-> { 1: nil }
        t -a-> { 1: nil }
    """)
    frame = bisim_partition(system).to_frame()
    assert frame.loc["s", "block"] == frame.loc["t", "block"]
    assert frame.loc["t", "representative"] == "s"


def test_partition_normalises_block_order():
    p1 = Partition((frozenset({"b", "c"}), frozenset({"a"})))
    p2 = Partition((frozenset({"a"}), frozenset({"c", "b"})))
    assert p1 == p2
    assert p1.index("a") == 0
    assert p1.block_of == {"a": 0, "b": 1, "c": 1}


def test_quotient(fixture_c):
    lumped = quotient(fixture_c)
    assert len(lumped) == len(bisim_partition(fixture_c))
    # Quotient of a quotient is discrete
    assert len(bisim_partition(lumped)) == len(lumped)
    # w_nil and nil collapse onto nil, the least name of their block
    assert lumped.dist("t6", "a")["nil"] == Fraction(1, 2)
    assert "w_nil" not in lumped


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in set_partitions(rest):
        for i in range(len(smaller)):
            yield smaller[:i] + [smaller[i] | {first}] + smaller[i + 1:]
        yield smaller + [frozenset({first})]


def respects_masses(system, blocks):
    # Same enabled actions and equal mass into every block, for every block
    for block in blocks:
        first = min(block)
        for state in block:
            if system.enabled(state) != system.enabled(first):
                return False
            for action in system.enabled(state):
                for target in blocks:
                    if (dist_mass(system.dist(state, action), target)
                            != dist_mass(system.dist(first, action), target)):
                        return False
    return True


@pytest.mark.parametrize("index", range(40))
def test_coarsest_against_every_equivalence(index):
    system = random_rplts(GenParams(max_states=5, max_branching=3, seed=case_seed(31, index)))
    partition = bisim_partition(system)
    assert respects_masses(system, partition.blocks)

    for blocks in set_partitions(list(system.states)):
        if respects_masses(system, blocks):
            assert all(any(block <= ours for ours in partition.blocks) for block in blocks)


@pytest.mark.parametrize("name", FIXTURES)
def test_partition_is_stable(name):
    system = load_fixture(name)
    partition = bisim_partition(system)
    for action in system.actions:
        for splitter in partition.blocks:
            for block in partition.blocks:
                masses = set()
                for state in block:
                    dist = system.dist(state, action)
                    masses.add(None if dist is None else dist_mass(dist, splitter))
                assert len(masses) == 1
