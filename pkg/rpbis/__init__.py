"""
The rpbis project decides probabilistic bisimilarity on reactive probabilistic
labeled transition systems and builds distinguishing modal formulas
"""

import rpbis.bisim as bisim
import rpbis.logic as logic
import rpbis.model as model
import rpbis.oracle as oracle
import rpbis.parser as parser
import rpbis.rpt as rpt
import rpbis.synth as synth
from rpbis.bisim import bisim_partition, bisimilar
from rpbis.logic import LogicId
from rpbis.model import Rplts
from rpbis.parser import parse_formula, parse_system, render_formula
from rpbis.synth import distinguish_states, distinguish_trees

__version__ = "0.2.0"

__all__ = [
    'bisim',
    'logic',
    'model',
    'oracle',
    'parser',
    'rpt',
    'synth',
    'Rplts',
    'LogicId',
    'bisim_partition',
    'bisimilar',
    'parse_formula',
    'parse_system',
    'render_formula',
    'distinguish_states',
    'distinguish_trees',
]
