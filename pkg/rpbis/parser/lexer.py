"""
Tokenizer shared by the system and formula parsers.
"""

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from rpbis.exceptions import DslSyntaxError
from rpbis.utils.rational_tools import parse_rational


@dataclass(frozen=True)
class SourceSpan:
    line: int
    column: int


class Terminal(enum.Enum):
    IDENT = "identifier"
    RAT = "number"
    ARROW = "'->'"
    DASH = "'-'"
    LBRACE = "'{'"
    RBRACE = "'}'"
    COMMA = "','"
    COLON = "':'"
    LANGLE = "'<'"
    RANGLE = "'>'"
    BANG = "'!'"
    AMP = "'&'"
    PIPE = "'|'"
    LPAREN = "'('"
    RPAREN = "')'"
    EOF = "end of input"


@dataclass(frozen=True)
class Token:
    terminal: Terminal
    text: str
    span: SourceSpan


# Order matters: '->' before '-', fractions before plain integers
_TOKEN_SPEC = [
    ("SKIP", r"[ \t\r]+"),
    ("NEWLINE", r"\n"),
    ("COMMENT", r"#[^\n]*"),
    ("RAT", r"\d+/\d+|\d+(?:\.\d+)?"),
    ("IDENT", r"[A-Za-z_][A-Za-z0-9_']*"),
    ("ARROW", r"->"),
    ("DASH", r"-"),
    ("LBRACE", r"\{"),
    ("RBRACE", r"\}"),
    ("COMMA", r","),
    ("COLON", r":"),
    ("LANGLE", r"<"),
    ("RANGLE", r">"),
    ("BANG", r"!"),
    ("AMP", r"&"),
    ("PIPE", r"\|"),
    ("LPAREN", r"\("),
    ("RPAREN", r"\)"),
    ("ERROR", r"."),
]

_TOKEN_RE = re.compile("|".join(f"(?P<{name}>{pattern})" for name, pattern in _TOKEN_SPEC))


def tokenize(text: str) -> List[Token]:
    """
    Split `text` into tokens, each carrying its 1-based line and column.
    The list always ends with an `EOF` token.
    """
    tokens = []
    line, line_start = 1, 0

    for match in _TOKEN_RE.finditer(text):
        kind = match.lastgroup
        span = SourceSpan(line, match.start() - line_start + 1)

        if kind == "NEWLINE":
            line, line_start = line + 1, match.end()
        elif kind in ("SKIP", "COMMENT"):
            continue
        elif kind == "ERROR":
            raise DslSyntaxError(f"unexpected character {match.group()!r}", span)
        else:
            tokens.append(Token(Terminal[kind], match.group(), span))

    tokens.append(Token(Terminal.EOF, "", SourceSpan(line, len(text) - line_start + 1)))
    return tokens


class TokenStream:
    """
    Cursor over a token list with one token of lookahead.
    """

    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def at(self, *terminals: Terminal) -> bool:
        return self.current.terminal in terminals

    def advance(self) -> Token:
        token = self.current
        if token.terminal is not Terminal.EOF:
            self.index += 1
        return token

    def expect(self, terminal: Terminal, context: str) -> Token:
        token = self.current
        if token.terminal is not terminal:
            found = token.text or token.terminal.value
            raise DslSyntaxError(
                f"expected {terminal.value} {context}, found {found!r}", token.span)
        return self.advance()

    def expect_rational(self, context: str) -> Tuple[Token, Fraction]:
        """Consume a number token and read it as an exact rational."""
        token = self.expect(Terminal.RAT, context)
        try:
            return token, parse_rational(token.text)
        except ValueError as err:
            raise DslSyntaxError(str(err), token.span) from err
