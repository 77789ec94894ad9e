"""Local intersection multiplicity at the origin.

The primary route is Fulton's algorithm, which works directly from the
axioms of intersection numbers.  The resultant route serves as an
independent check: after a shear ``X -> X + cY`` that separates the origin
from every other intersection on the line ``X = 0``, the order of the
Y-resultant at ``X = 0`` is the local multiplicity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import sympy

from ..rational import INF, Ext
from .poly import BiPoly

_X, _Y = sympy.symbols("X Y")


def _on_x_axis(f: BiPoly) -> dict[int, Fraction]:
    """Coefficients of ``f(X, 0)``."""
    return {a: c for (a, b), c in f.terms.items() if b == 0}


def _divide_by_Y(f: BiPoly) -> BiPoly:
    return BiPoly({(a, b - 1): c for (a, b), c in f.terms.items()})


def _truncate(f: BiPoly, k: int) -> BiPoly:
    return BiPoly({m: c for m, c in f.terms.items() if m[0] + m[1] < k})


def _degree(f: BiPoly) -> int:
    return max(a + b for a, b in f.terms)


def intersection_mult(f: BiPoly, g: BiPoly, bound: int | None = None) -> Ext:
    """``(f, g)_0`` by Fulton's algorithm; infinite iff a common branch passes through 0.

    With ``bound`` the computation runs modulo terms of degree ``bound``, which
    keeps coefficients small; any value ``>= bound`` is then reported as ``bound``.
    """
    if f.is_zero or g.is_zero:
        return INF if bound is None else bound
    if bound is None:
        # without a common component the local number is at most deg f * deg g
        cap = _degree(f) * _degree(g) + 1
        value = _fulton(f, g, cap)
        return INF if value >= cap else value
    return _fulton(f, g, bound)


def _fulton(f: BiPoly, g: BiPoly, bound: int) -> int:
    total = 0
    F, G = f, g
    precision = bound
    while True:
        precision = min(precision, bound - total)
        if precision <= 0:
            return bound
        F, G = _truncate(F, precision), _truncate(G, precision)
        if F.at_origin() != 0 or G.at_origin() != 0:
            return total
        if F.is_zero or G.is_zero:
            return bound
        fx, gx = _on_x_axis(F), _on_x_axis(G)
        if not fx and not gx:
            return bound
        if not fx or not gx:
            # Y divides one of them: (Y*H, G) = (Y, G) + (H, G)
            if not gx:
                F, G, fx, gx = G, F, gx, fx
            total += min(gx)
            F = _divide_by_Y(F)
            precision -= 1
            continue
        r, s = max(fx), max(gx)
        if r > s:
            F, G, fx, gx, r, s = G, F, gx, fx, s, r
        # cancel the top X-power of G(X, 0)
        factor = gx[s] / fx[r]
        G = G - F * BiPoly({(s - r, 0): factor})


@dataclass(frozen=True)
class ResultantCheck:
    value: Ext
    shear: int


def _is_separated(fs: sympy.Expr, gs: sympy.Expr) -> bool:
    """Leading Y-coefficients survive at X = 0 and the origin is the only
    common point on the line X = 0."""
    for p in (fs, gs):
        if sympy.Poly(p, _Y).LC().subs(_X, 0) == 0:
            return False
    f0 = sympy.Poly(fs.subs(_X, 0), _Y)
    g0 = sympy.Poly(gs.subs(_X, 0), _Y)
    if f0.is_zero or g0.is_zero:
        return False
    return len(sympy.gcd(f0, g0).terms()) == 1


def to_sympy_expr(f: BiPoly) -> sympy.Expr:
    return sum(
        (sympy.Rational(c.numerator, c.denominator) * _X**a * _Y**b for (a, b), c in f.terms.items()),
        sympy.Integer(0),
    )


def intersection_by_resultant(f: BiPoly, g: BiPoly, max_shear: int = 50) -> ResultantCheck:
    """``(f, g)_0`` as the X-order of a sheared resultant; records the shear used."""
    fe, ge = to_sympy_expr(f), to_sympy_expr(g)
    common = sympy.gcd(fe, ge)
    if common.free_symbols:
        if common.subs({_X: 0, _Y: 0}) == 0:
            return ResultantCheck(INF, 0)
        fe, ge = sympy.cancel(fe / common), sympy.cancel(ge / common)
    for c in range(max_shear + 1):
        fs = sympy.expand(fe.subs(_X, _X + c * _Y))
        gs = sympy.expand(ge.subs(_X, _X + c * _Y))
        if _Y not in fs.free_symbols or _Y not in gs.free_symbols:
            continue
        if not _is_separated(fs, gs):
            continue
        res = sympy.Poly(sympy.resultant(fs, gs, _Y), _X)
        return ResultantCheck(min(m[0] for m in res.monoms()), c)
    raise ArithmeticError("no separating shear found")


__all__ = ["ResultantCheck", "intersection_by_resultant", "intersection_mult", "to_sympy_expr"]
