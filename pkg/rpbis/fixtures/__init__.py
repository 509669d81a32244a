# flake8: noqa
"""
This Module ships the reference systems used by the tests and the CLI. Including:
    - A: equal one-step behaviour, different two-step behaviour (t1, t2)
    - C: b and c reached apart or together (t5, t6)
    - D: a single extra c-transition (t7, t8)
    - E: mass moved from a joint branch to split ones (t9, t10)
    - F: three states with one a-transition each (t11, t12, t13)
    - G: states differing at level 1 only through their first action (s1, s2)
"""

from importlib.resources import files

from rpbis.model.rplts import Rplts
from rpbis.parser.system_parser import parse_system

FIXTURES = ("A", "C", "D", "E", "F", "G")


def fixture_text(name: str) -> str:
    """Source text of the fixture called `name`."""
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}, expected one of {', '.join(FIXTURES)}")
    return files(__name__).joinpath(f"{name}.rplts").read_text(encoding="utf-8")


def load_fixture(name: str) -> Rplts:
    return parse_system(fixture_text(name))


__all__ = [
    'FIXTURES',
    'fixture_text',
    'load_fixture',
]
