"""Exact rational-or-infinite values and their canonical text form."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

INF = math.inf
NEG_INF = -math.inf

Ext = Union[Fraction, float]
"""A ``Fraction`` or one of the two float infinities; never a finite float."""


def is_inf(x: Ext) -> bool:
    return isinstance(x, float) and math.isinf(x)


def ext(x: object) -> Ext:
    """Coerce ints, Fractions, rational strings and infinities to ``Ext``."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        if math.isinf(x):
            return x
        raise TypeError(f"finite float {x!r} is not an exact rational")
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot interpret {x!r} as a rational")


def parse_rational(text: str) -> Ext:
    s = text.strip()
    low = s.lower()
    if low in ("inf", "+inf", "infinity", "∞"):
        return INF
    if low in ("-inf", "-infinity", "-∞"):
        return NEG_INF
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def fmt(x: Ext) -> str:
    """Canonical string: ``"p/q"`` (``"p"`` when q = 1), ``"inf"`` or ``"-inf"``."""
    if is_inf(x):
        return "inf" if x > 0 else "-inf"
    return str(Fraction(x))
