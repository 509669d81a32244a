"""
Canonical text renderers for formulas and systems. The output parses back
to an equal value.
"""

from rpbis.logic.formula import And, Diamond, Formula, Neg, Or, Top
from rpbis.model.rplts import Rplts
from rpbis.utils.rational_tools import render_prob


def _render_unary(f: Formula, decimal: bool) -> str:
    if isinstance(f, Top):
        return "true"
    if isinstance(f, Neg):
        return "!" + _render_unary(f.body, decimal)
    if isinstance(f, Diamond):
        head = f"<{f.action}>{render_prob(f.bound, decimal)}"
        # Trailing true is omitted
        if isinstance(f.body, Top):
            return head
        return f"{head} {_render_unary(f.body, decimal)}"
    return f"({render_formula(f, decimal)})"


def render_formula(f: Formula, decimal: bool = False) -> str:
    """
    Canonical text of a formula.

    Parameters
    ----------
    f : `Formula`

    decimal : `bool`, (optional)
        Render terminating bounds as decimals instead of ``num/den``.

    Returns
    -------
    text : `str`
    """
    if isinstance(f, (And, Or)):
        symbol = " & " if isinstance(f, And) else " | "
        # Left nesting of the same connective is the parser's associativity
        if type(f.left) is type(f):
            left = render_formula(f.left, decimal)
        else:
            left = _render_unary(f.left, decimal)
        return left + symbol + _render_unary(f.right, decimal)
    return _render_unary(f, decimal)


def render_system(system: Rplts, decimal: bool = False) -> str:
    """
    Canonical ``.rplts`` text of a system: sorted states, actions and targets.
    Terminal states that no transition reaches are emitted as bare declarations.
    """
    lines = []
    targets = set()
    for state, action, dist in system.transitions():
        branches = ", ".join(f"{render_prob(p, decimal)}: {t}" for t, p in dist.items())
        lines.append(f"{state} -{action}-> {{ {branches} }}")
        targets.update(dist)

    for state in system.states:
        if not system.enabled(state) and state not in targets:
            lines.append(state)

    return "\n".join(lines) + ("\n" if lines else "")
