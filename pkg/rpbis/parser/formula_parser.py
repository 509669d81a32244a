"""
Reader for formula text.

    formula := unary ("&" unary)* | unary ("|" unary)*
    unary   := "!" unary | "<" ACTION ">" RAT [unary] | "true" | "(" formula ")"

Diamonds bind tighter than ``!``, which binds tighter than ``&`` and ``|``.
"""

from rpbis.exceptions import DslSyntaxError, ProbOutOfRangeError
from rpbis.logic.formula import TOP, And, Diamond, Formula, Neg, Or
from rpbis.parser.lexer import Terminal, TokenStream

_UNARY_START = (Terminal.BANG, Terminal.LANGLE, Terminal.LPAREN)


def _starts_unary(stream: TokenStream) -> bool:
    if stream.at(*_UNARY_START):
        return True
    return stream.at(Terminal.IDENT) and stream.current.text == "true"


def _parse_diamond(stream: TokenStream) -> Formula:
    stream.expect(Terminal.LANGLE, "to open a diamond")
    action = stream.expect(Terminal.IDENT, "as diamond action").text
    stream.expect(Terminal.RANGLE, "to close a diamond")

    token, bound = stream.expect_rational("as diamond bound")
    if bound > 1:
        raise ProbOutOfRangeError(f"diamond bound {token.text} exceeds 1", token.span)

    body = _parse_unary(stream) if _starts_unary(stream) else TOP
    return Diamond(action, bound, body)


def _parse_unary(stream: TokenStream) -> Formula:
    token = stream.current

    if token.terminal is Terminal.BANG:
        stream.advance()
        return Neg(_parse_unary(stream))

    if token.terminal is Terminal.LANGLE:
        return _parse_diamond(stream)

    if token.terminal is Terminal.LPAREN:
        stream.advance()
        inner = _parse_formula(stream)
        stream.expect(Terminal.RPAREN, "to close a parenthesis")
        return inner

    if token.terminal is Terminal.IDENT and token.text == "true":
        stream.advance()
        return TOP

    found = token.text or token.terminal.value
    raise DslSyntaxError(f"expected a formula, found {found!r}", token.span)


def _parse_formula(stream: TokenStream) -> Formula:
    result = _parse_unary(stream)
    if not stream.at(Terminal.AMP, Terminal.PIPE):
        return result

    # The first connective fixes the operator of this level
    operator = stream.current.terminal
    node = And if operator is Terminal.AMP else Or
    while stream.at(Terminal.AMP, Terminal.PIPE):
        token = stream.advance()
        if token.terminal is not operator:
            raise DslSyntaxError("'&' and '|' cannot be mixed without parentheses", token.span)
        result = node(result, _parse_unary(stream))
    return result


def parse_formula(text: str) -> Formula:
    """
    Parse formula text.

    Parameters
    ----------
    text : `str`
        For example ``<a>0.5 (<b>1 & <c>1)``.

    Returns
    -------
    formula : `Formula`
    """
    stream = TokenStream(text)
    result = _parse_formula(stream)
    stream.expect(Terminal.EOF, "after the formula")
    return result
