"""Bivariate polynomials with exact coefficients.

``BiPoly`` has nonnegative integer exponents.  ``TrackPoly`` allows rational
exponents in X, which is what substituting a Puiseux polynomial for Y
produces.  Both are thin immutable wrappers around a term dictionary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm
from typing import Iterator, Mapping

Term = tuple  # (alpha, beta)


def _clean(terms: Mapping) -> dict:
    return {k: Fraction(v) for k, v in terms.items() if v != 0}


@dataclass(frozen=True, eq=False)
class _Poly2:
    terms: dict

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", _clean(self.terms))

    def __eq__(self, other: object) -> bool:
        return type(self) is type(other) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((type(self).__name__, frozenset(self.terms.items())))

    def __iter__(self) -> Iterator:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def support(self) -> list[tuple]:
        return sorted(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, alpha, beta) -> Fraction:
        return self.terms.get((alpha, beta), Fraction(0))

    @property
    def delta_X(self):
        return min(a for a, _ in self.terms)

    @property
    def delta_Y(self) -> int:
        return min(b for _, b in self.terms)

    def _new(self, terms: dict):
        return type(self)(terms)

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return self._new(out)

    def __neg__(self):
        return self._new({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._new({k: v * other for k, v in self.terms.items()})
        out: dict = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return self._new(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = self._new({(0, 0): 1} if not isinstance(self, TrackPoly) else {(Fraction(0), 0): 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def diff_Y(self):
        return self._new({(a, b - 1): b * c for (a, b), c in self.terms.items() if b > 0})


class BiPoly(_Poly2):
    """Polynomial in X and Y with integer exponents and rational coefficients."""

    def __post_init__(self) -> None:
        super().__post_init__()
        for a, b in self.terms:
            if int(a) != a or int(b) != b or a < 0 or b < 0:
                raise ValueError(f"exponent pair {(a, b)} is not a pair of naturals")
        object.__setattr__(self, "terms", {(int(a), int(b)): v for (a, b), v in self.terms.items()})

    @classmethod
    def const(cls, c) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def X(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def Y(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    def diff_X(self) -> "BiPoly":
        return BiPoly({(a - 1, b): a * c for (a, b), c in self.terms.items() if a > 0})

    @property
    def order(self) -> int:
        """Total order at the origin (lowest total degree)."""
        return min(a + b for a, b in self.terms)

    @property
    def initial_form(self) -> "BiPoly":
        k = self.order
        return BiPoly({(a, b): c for (a, b), c in self.terms.items() if a + b == k})

    def at_origin(self) -> Fraction:
        return self.coeff(0, 0)

    def y_order_on_axis(self) -> int | None:
        """``ord_Y f(0, Y)``; None when ``f(0, Y)`` vanishes identically."""
        bs = [b for (a, b) in self.terms if a == 0]
        return min(bs) if bs else None

    def substitute_linear(self, a, b, c, d) -> "BiPoly":
        """``f(aX + bY, cX + dY)``."""
        X, Y = BiPoly.X(), BiPoly.Y()
        u = X * Fraction(a) + Y * Fraction(b)
        v = X * Fraction(c) + Y * Fraction(d)
        out = BiPoly({})
        upow = {0: BiPoly.const(1)}
        vpow = {0: BiPoly.const(1)}
        for (al, be), coef in self.terms.items():
            while max(upow) < al:
                upow[max(upow) + 1] = upow[max(upow)] * u
            while max(vpow) < be:
                vpow[max(vpow) + 1] = vpow[max(vpow)] * v
            out = out + upow[al] * vpow[be] * coef
        return out

    def to_track(self) -> "TrackPoly":
        return TrackPoly({(Fraction(a), b): c for (a, b), c in self.terms.items()})

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"BiPoly({format_poly(self)!r})"


class TrackPoly(_Poly2):
    """Polynomial in Y whose coefficients are finite sums of rational powers of X."""

    def __post_init__(self) -> None:
        super().__post_init__()
        object.__setattr__(
            self, "terms", {(Fraction(a), int(b)): v for (a, b), v in self.terms.items()}
        )

    @property
    def denominator(self) -> int:
        return lcm(1, *(a.denominator for a, _ in self.terms))

    def shift(self, coef: Fraction, theta: Fraction) -> "TrackPoly":
        """Substitute ``Y -> Y + coef * X^theta``."""
        out: dict = {}
        for (a, b), c in self.terms.items():
            power = Fraction(1)
            for k in range(b, -1, -1):
                # term binom(b, k) * coef^(b-k) * X^(a + (b-k) theta) * Y^k
                key = (a + (b - k) * theta, k)
                out[key] = out.get(key, 0) + c * comb(b, k) * power
                power *= coef
        return TrackPoly(out)

    def weighted_initial(self, theta: Fraction) -> dict:
        """Terms minimising ``alpha + theta * beta``."""
        low = min(a + theta * b for a, b in self.terms)
        return {(a, b): c for (a, b), c in self.terms.items() if a + theta * b == low}

    def __repr__(self) -> str:
        return f"TrackPoly({self.terms!r})"


# ---------------------------------------------------------------- printing


def _monomial(alpha, beta) -> str:
    parts = []
    if alpha:
        parts.append("X" if alpha == 1 else f"X^{alpha}")
    if beta:
        parts.append("Y" if beta == 1 else f"Y^{beta}")
    return "*".join(parts)


def format_poly(p: BiPoly) -> str:
    """Canonical text: terms by descending Y degree, then ascending X degree."""
    if p.is_zero:
        return "0"
    pieces = []
    for (a, b) in sorted(p.terms, key=lambda k: (-k[1], k[0])):
        c = p.terms[(a, b)]
        mono = _monomial(a, b)
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{mag}*{mono}"
        else:
            body = str(mag)
        sign = "-" if c < 0 else "+"
        pieces.append((sign, body))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


# ----------------------------------------------------------------- parsing


class PolySyntaxError(SyntaxError):
    """Malformed polynomial text; ``position`` is a 0-based character offset."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise PolySyntaxError(message, self.text, self.pos)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def parse(self) -> BiPoly:
        if not self.text.strip():
            self.error("empty input")
        p = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return p

    def expr(self) -> BiPoly:
        if self.take("-"):
            p = -self.term()
        else:
            self.take("+")
            p = self.term()
        while True:
            if self.take("+"):
                p = p + self.term()
            elif self.peek() in ("-", "−"):
                self.pos += 1
                p = p - self.term()
            else:
                return p

    def term(self) -> BiPoly:
        p = self.power()
        while True:
            if self.take("*"):
                p = p * self.power()
            elif self.peek() == "/":
                start = self.pos
                self.pos += 1
                q = self.power()
                if set(q.terms) - {(0, 0)} or q.is_zero:
                    self.pos = start
                    self.error("division by a non-constant or zero")
                p = p * (1 / q.at_origin())
            else:
                return p

    def power(self) -> BiPoly:
        base = self.atom()
        if self.take("^"):
            self.skip()
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if start == self.pos:
                self.error("expected a nonnegative integer exponent")
            base = base ** int(self.text[start:self.pos])
        return base

    def atom(self) -> BiPoly:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            p = self.expr()
            if not self.take(")"):
                self.error("expected ')'")
            return p
        if ch in ("X", "x"):
            self.pos += 1
            return BiPoly.X()
        if ch in ("Y", "y"):
            self.pos += 1
            return BiPoly.Y()
        if ch.isdigit():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            return BiPoly.const(int(self.text[start:self.pos]))
        if ch == "-":
            self.pos += 1
            return -self.power()
        self.error(f"unexpected {ch!r}" if ch else "unexpected end of input")


def parse_poly(text: str) -> BiPoly:
    return _Parser(text).parse()


__all__ = ["BiPoly", "PolySyntaxError", "TrackPoly", "format_poly", "parse_poly"]
