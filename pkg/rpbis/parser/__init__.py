# flake8: noqa
"""
This Module implements the text formats. Including:
    - The ``.rplts`` system format
    - Formula syntax
    - Canonical renderers
"""

from rpbis.parser.formula_parser import parse_formula
from rpbis.parser.lexer import SourceSpan
from rpbis.parser.render import render_formula, render_system
from rpbis.parser.system_parser import parse_system, read_system

__all__ = [
    "SourceSpan",
    "parse_formula",
    "parse_system",
    "read_system",
    "render_formula",
    "render_system"]
