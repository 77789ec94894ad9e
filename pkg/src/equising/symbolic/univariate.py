"""Univariate helpers over the rationals, delegating algebra to sympy."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

import sympy

Z = sympy.Symbol("Z")


def to_sympy(coeffs: Mapping[int, Fraction], var: sympy.Symbol = Z) -> sympy.Poly:
    """Build a sympy polynomial from ``{exponent: coefficient}``."""
    expr = sum(
        (sympy.Rational(c.numerator, c.denominator) * var**k for k, c in coeffs.items()),
        sympy.Integer(0),
    )
    return sympy.Poly(expr, var, domain="QQ")


def from_sympy(p: sympy.Poly) -> dict[int, Fraction]:
    out = {}
    for (k,), c in p.terms():
        c = sympy.Rational(c)
        out[int(k)] = Fraction(int(c.p), int(c.q))
    return out


def squarefree_degree(p: sympy.Poly) -> int:
    """Number of distinct complex roots."""
    if p.degree() <= 0:
        return 0
    return p.sqf_part().degree()


def monic_factors(p: sympy.Poly) -> list[tuple[tuple[Fraction, ...], int]]:
    """Irreducible monic factors over the rationals with multiplicities.

    A factor is keyed by its coefficient tuple, highest degree first, so
    that factors from different polynomials can be matched exactly.
    """
    _, factors = p.factor_list()
    out = []
    for q, mult in factors:
        q = q.monic()
        key = tuple(Fraction(int(sympy.Rational(c).p), int(sympy.Rational(c).q)) for c in q.all_coeffs())
        out.append((key, int(mult)))
    out.sort()
    return out


def key_to_sympy(key: tuple[Fraction, ...], var: sympy.Symbol = Z) -> sympy.Poly:
    deg = len(key) - 1
    return to_sympy({deg - i: c for i, c in enumerate(key)}, var)


def integer_root(n: int, k: int) -> int | None:
    """Exact ``k``-th root of a nonnegative integer, if it exists."""
    if n < 0:
        raise ValueError("negative radicand")
    root = sympy.integer_nthroot(n, k)
    return int(root[0]) if root[1] else None


def rational_root(c: Fraction, k: int) -> Fraction | None:
    """A rational ``a`` with ``a^k = c``, or None.

    For even ``k`` the positive root is returned.
    """
    c = Fraction(c)
    if c < 0:
        if k % 2 == 0:
            return None
        r = rational_root(-c, k)
        return None if r is None else -r
    num = integer_root(c.numerator, k)
    den = integer_root(c.denominator, k)
    if num is None or den is None:
        return None
    return Fraction(num, den)


__all__ = [
    "Z",
    "from_sympy",
    "integer_root",
    "key_to_sympy",
    "monic_factors",
    "rational_root",
    "squarefree_degree",
    "to_sympy",
]
