import pytest

from rpbis.fixtures import load_fixture
from rpbis.parser import parse_system


@pytest.fixture(scope="session")
def fixture_a():
    return load_fixture("A")


@pytest.fixture(scope="session")
def fixture_c():
    return load_fixture("C")


@pytest.fixture(scope="session")
def fixture_d():
    return load_fixture("D")


@pytest.fixture(scope="session")
def fixture_e():
    return load_fixture("E")


@pytest.fixture(scope="session")
def fixture_f():
    return load_fixture("F")


@pytest.fixture(scope="session")
def fixture_g():
    return load_fixture("G")


@pytest.fixture(scope="session")
def merged_weight_systems():
    """Children holding <b>1 with weights {1/5, 1/5, 1/10, 1/10} and {1/10, 3/10, 1/5}."""
    first = parse_system("""
        t3 -a-> { 1/5: x1, 1/5: x2, 1/10: x3, 1/10: x4, 2/5: nil }
        x1 -b-> { 1: nil }
        x1 -c-> { 1: nil }
        x2 -b-> { 1: nil }
        x2 -d-> { 1: nil }
        x3 -b-> { 1: nil }
        x3 -e-> { 1: nil }
        x4 -b-> { 1: nil }
        x4 -f-> { 1: nil }
    """)
    second = parse_system("""
        t4 -a-> { 1/10: y1, 3/10: y2, 1/5: y3, 2/5: nil }
        y1 -b-> { 1: nil }
        y1 -c-> { 1: nil }
        y2 -b-> { 1: nil }
        y2 -d-> { 1: nil }
        y3 -b-> { 1: nil }
        y3 -e-> { 1: nil }
    """)
    return first, second


@pytest.fixture(scope="session")
def detour_system():
    """s0 and s2 where the disjunctive synthesis needs a second candidate."""
    return parse_system("""
        s0 -a-> { 1/4: s2, 3/4: s3 }
        s2 -a-> { 1: s3 }
        s3 -a-> { 1/2: s0, 1/2: s4 }
        s4 -a-> { 4/5: s0, 1/5: s1 }
    """)
