# flake8: noqa
"""
This Module implements the randomised oracles. Including:
    - Seeded random system generation
    - Brute-force logical equivalence by formula enumeration
    - The self-test property suite
"""

from rpbis.oracle.bruteforce import (achievable_masses, enum_formulas,
                                     logical_eq_bruteforce)
from rpbis.oracle.generator import GenParams, case_seed, random_rplts
from rpbis.oracle.selftest import (CaseResult, SelftestResult, check_system,
                                   run_case, run_selftest)

__all__ = [
    'GenParams',
    'case_seed',
    'random_rplts',
    'achievable_masses',
    'enum_formulas',
    'logical_eq_bruteforce',
    'CaseResult',
    'SelftestResult',
    'check_system',
    'run_case',
    'run_selftest',
]
