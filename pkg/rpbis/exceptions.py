"""
Exception hierarchy shared by every rpbis module.
"""


class RpbisError(Exception):
    """Root of all errors raised by rpbis."""


class ModelError(RpbisError, ValueError):
    """An input system or distribution violates a model invariant."""


class SumNotOneError(ModelError):
    pass


class NegativeProbError(ModelError):
    pass


class DuplicateTransitionError(ModelError):
    pass


class UnknownStateError(ModelError, KeyError):

    def __str__(self):
        # KeyError quotes its argument otherwise
        return str(self.args[0]) if self.args else ""


class ReservedStateError(ModelError):
    pass


class ParseError(RpbisError, ValueError):
    """
    Error raised while reading system or formula text.

    Parameters
    ----------
    message : `str`
        Human readable description.

    span : `SourceSpan`, (optional)
        Position (1-based line and column) of the offending token.
    """

    def __init__(self, message, span=None):
        self.message = message
        self.span = span
        if span is not None:
            message = f"{message} at line {span.line}, column {span.column}"
        super().__init__(message)


class DslSyntaxError(ParseError):
    pass


class ProbOutOfRangeError(ParseError):
    pass


class ConfigError(RpbisError, ValueError):
    """A setting read from the environment is malformed."""


class SynthesisError(RpbisError, RuntimeError):
    """A constructive step of formula synthesis could not be carried out."""


class PhiSetOverflowError(SynthesisError):
    pass
