"""
Reader for the ``.rplts`` text format.

    system := decl*
    decl   := ID "-" ACTION "->" "{" branch ("," branch)* "}" | ID
    branch := RAT ":" ID

A bare ``ID`` declares a state without transitions. ``#`` starts a comment.
"""

import logging

from rpbis.model.rplts import Rplts, validate_rplts
from rpbis.parser.lexer import Terminal, TokenStream

_logger = logging.getLogger(__name__)


def _parse_branch(stream: TokenStream):
    _, prob = stream.expect_rational("at the start of a branch")
    stream.expect(Terminal.COLON, "after a branch probability")
    target = stream.expect(Terminal.IDENT, "as branch target").text
    return target, prob


def _parse_decl(stream: TokenStream, raw, declared):
    source = stream.expect(Terminal.IDENT, "at the start of a declaration").text

    # Bare state declaration
    if not stream.at(Terminal.DASH):
        declared.append(source)
        return

    stream.advance()
    action = stream.expect(Terminal.IDENT, "as transition label").text
    stream.expect(Terminal.ARROW, "after the transition label")
    stream.expect(Terminal.LBRACE, "before the branches")

    branches = [_parse_branch(stream)]
    while stream.at(Terminal.COMMA):
        stream.advance()
        branches.append(_parse_branch(stream))

    stream.expect(Terminal.RBRACE, "after the branches")
    raw.append((source, action, branches))


def parse_system(text: str) -> Rplts:
    """
    Parse system text into a validated `Rplts`.

    Parameters
    ----------
    text : `str`
        Source in the ``.rplts`` format.

    Returns
    -------
    system : `Rplts`
        Raises `DslSyntaxError` on malformed input and the model errors of
        `validate_rplts` on invalid systems.
    """
    stream = TokenStream(text)
    raw, declared = [], []

    while not stream.at(Terminal.EOF):
        _parse_decl(stream, raw, declared)

    states = set(declared)
    for source, _, branches in raw:
        states.add(source)
        states.update(target for target, _ in branches)

    system = validate_rplts(raw, states=states)
    _logger.debug("parsed %d declarations into %r", len(raw) + len(declared), system)
    return system


def read_system(path) -> Rplts:
    """Read and parse a ``.rplts`` file."""
    with open(path, "r", encoding="utf-8") as fh:
        return parse_system(fh.read())
