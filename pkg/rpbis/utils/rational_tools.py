"""
Exact rational helpers: parsing literals, coercing user values and rendering.
"""

import re
from fractions import Fraction
from numbers import Rational

from rpbis.exceptions import NegativeProbError

RATIONAL_PATTERN = re.compile(r"(?P<num>\d+)/(?P<den>\d+)|(?P<int>\d+)(?:\.(?P<frac>\d+))?")


def parse_rational(text: str) -> Fraction:
    """
    Convert a rational literal to an exact `Fraction`.

    Accepted forms are ``INT/INT``, ``INT`` and ``INT.DIGITS``. Decimals are
    read digit by digit, never through a binary float.

    Parameters
    ----------
    text : `str`
        The literal, without surrounding whitespace.

    Returns
    -------
    value : `fractions.Fraction`
    """
    match = RATIONAL_PATTERN.fullmatch(text)
    if match is None:
        raise ValueError(f"not a rational literal: {text!r}")

    if match.group("num") is not None:
        den = int(match.group("den"))
        if den == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(int(match.group("num")), den)

    digits = match.group("frac") or ""
    return Fraction(int(match.group("int") + digits), 10 ** len(digits))


def as_prob(value) -> Fraction:
    """
    Coerce an int, a `Fraction` or a literal string into an exact probability.

    Floats are rejected: they cannot be compared for strict inequality safely.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"probabilities must be exact, got {type(value).__name__}")

    if isinstance(value, str):
        result = parse_rational(value.strip())
    elif isinstance(value, Rational):
        result = Fraction(value)
    else:
        raise TypeError(f"cannot read a probability from {type(value).__name__}")

    if result < 0:
        raise NegativeProbError(f"negative probability {result}")
    return result


def is_terminating(value: Fraction) -> bool:
    """True when the decimal expansion of `value` is finite."""
    den = value.denominator
    for factor in (2, 5):
        while den % factor == 0:
            den //= factor
    return den == 1


def render_prob(value: Fraction, decimal: bool = False) -> str:
    """
    Canonical text of an exact probability.

    Parameters
    ----------
    value : `fractions.Fraction`

    decimal : `bool`, (optional)
        Render terminating values as decimals (``0.25``). Values with an
        infinite expansion keep the ``num/den`` form.
    """
    if value.denominator == 1:
        return str(value.numerator)

    if decimal and is_terminating(value):
        # Scale to the smallest power of ten that clears the denominator
        places = 0
        scaled = value
        while scaled.denominator != 1:
            scaled *= 10
            places += 1
        digits = str(scaled.numerator).rjust(places + 1, "0")
        return f"{digits[:-places]}.{digits[-places:]}"

    return f"{value.numerator}/{value.denominator}"
