"""From a polynomial to germ data: branches, their types and contacts."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import sympy

from ..branch import CharData
from ..rational import INF, Ext
from ..space import Germ, validate_germ
from .intersection import _X, _Y, to_sympy_expr
from .poly import BiPoly
from .tracks import IrrationalTrackRoot, NewtonTree, NonReduced, build_newton_tree


class UnsupportedBranchShape(ValueError):
    """A rational factor could not be certified as a single branch."""


class NotAGerm(ValueError):
    """The polynomial is zero or does not vanish at the origin."""


def _from_sympy(expr: sympy.Expr) -> BiPoly:
    p = sympy.Poly(expr, _X, _Y, domain="QQ")
    terms = {}
    for (a, b), c in p.terms():
        c = sympy.Rational(c)
        terms[(int(a), int(b))] = Fraction(int(c.p), int(c.q))
    return BiPoly(terms)


def rational_factors(f: BiPoly) -> list[tuple[BiPoly, int]]:
    """Irreducible rational factors with multiplicities, constants dropped."""
    _, facs = sympy.factor_list(to_sympy_expr(f), _X, _Y)
    out = []
    for q, m in facs:
        F = _from_sympy(q)
        lead = min(F.terms, key=lambda k: (-k[1], k[0]))
        out.append((-F if F.terms[lead] < 0 else F, int(m)))
    return out


def extract_branch(f: BiPoly) -> CharData:
    """Type of a rationally irreducible polynomial that defines a single branch."""
    if f.is_zero or f.at_origin() != 0:
        raise NotAGerm("polynomial must vanish at the origin")
    if f.order == 1:
        return CharData.smooth()
    if f.y_order_on_axis() is None:
        raise UnsupportedBranchShape(f"{f} is divisible by X")
    try:
        tree = build_newton_tree([f])
    except IrrationalTrackRoot as exc:
        raise UnsupportedBranchShape(f"irrational track: {exc}") from exc
    if len(tree.leaves) != 1:
        raise UnsupportedBranchShape(
            f"{f} splits into {len(tree.leaves)} branches over the complex numbers"
        )
    return tree.leaves[0].char


@dataclass
class BranchSource:
    """Where a germ branch comes from: the X axis, or a leaf of the track tree."""

    factor: BiPoly
    leaf: int | None
    split: bool = False


@dataclass
class PolyGerm:
    poly: BiPoly
    reduced: BiPoly
    germ: Germ
    tree: NewtonTree | None
    sources: list[BranchSource]
    delta_X: int
    notes: list[str] = field(default_factory=list)

    @property
    def p(self) -> int:
        """``ord f~(0, Y)`` for the part of ``f`` coprime to X."""
        return self.reduced.y_order_on_axis() or 0

    def leaf_index(self, i: int) -> int | None:
        return self.sources[i].leaf

    def line_contacts(self, slope: Fraction) -> tuple[Ext, ...]:
        """Contacts of every branch with the line ``Y = slope * X``."""
        out = []
        for i, src in enumerate(self.sources):
            if src.leaf is None:
                out.append(Fraction(1))
                continue
            m = self.tree.line_intersection(src.leaf, slope)
            out.append(INF if m == INF else m / self.germ.ord(i))
        return tuple(out)

    def x_contacts(self) -> tuple[Ext, ...]:
        """Contacts of every branch with the axis ``X = 0``."""
        out = []
        for i, src in enumerate(self.sources):
            if src.leaf is None:
                out.append(INF)
            else:
                out.append(Fraction(self.tree.leaves[src.leaf].N, self.germ.ord(i)))
        return tuple(out)

    def node_contacts(self, node) -> tuple[Ext, ...]:
        """Contacts of every branch with the branch parametrised by a track."""
        out = []
        for i, src in enumerate(self.sources):
            if src.leaf is None:
                out.append(Fraction(node.N, node.ord))
                continue
            m = self.tree.node_intersection(src.leaf, node)
            out.append(INF if m == INF else m / (self.germ.ord(i) * node.ord))
        return tuple(out)


def _checked_factors(f: BiPoly, factors: Sequence[BiPoly]) -> list[tuple[BiPoly, int]]:
    product = BiPoly.const(1)
    for q in factors:
        product = product * q
    lead = min(f.terms, key=lambda k: (-k[1], k[0]))
    if product.coeff(*lead) == 0 or product * (f.terms[lead] / product.coeff(*lead)) != f:
        raise ValueError("supplied factors do not multiply to the polynomial")
    counts: dict[BiPoly, int] = {}
    for q in factors:
        counts[q] = counts.get(q, 0) + 1
    return list(counts.items())


def germ_from_poly(f: BiPoly, factors: Sequence[BiPoly] | None = None) -> PolyGerm:
    """Branches, types and contact matrix of the germ ``f = 0`` at the origin.

    Rational factors that split analytically are expanded into one branch per
    leaf and labelled ``F#k``.  A known factorization may be passed in to
    skip bivariate factoring.
    """
    if f.is_zero or f.at_origin() != 0:
        raise NotAGerm("polynomial must be nonzero and vanish at the origin")
    notes: list[str] = []
    delta_X = 0
    track_factors: list[BiPoly] = []
    found = rational_factors(f) if factors is None else _checked_factors(f, factors)
    for q, mult in found:
        if mult > 1:
            raise NonReduced(f"factor {q} appears with multiplicity {mult}")
        if q.at_origin() != 0:
            notes.append(f"unit factor {q} dropped")
            continue
        if set(q.terms) == {(1, 0)}:
            delta_X = 1
            continue
        track_factors.append(q)
    reduced = BiPoly.const(1)
    for q in track_factors:
        reduced = reduced * q

    tree = build_newton_tree(track_factors) if track_factors else None
    labels: list[str] = []
    chars: list[CharData] = []
    sources: list[BranchSource] = []
    if delta_X:
        labels.append("X")
        chars.append(CharData.smooth())
        sources.append(BranchSource(BiPoly.X(), None))
    for k, q in enumerate(track_factors):
        leaves = tree.leaves_of(k)
        split = len(leaves) > 1
        if split:
            notes.append(f"{q} splits into {len(leaves)} branches")
        ord_sum = sum(lf.ord for lf in leaves)
        if ord_sum != q.order:
            raise AssertionError(f"branch orders of {q} sum to {ord_sum}, not {q.order}")
        for n, lf in enumerate(leaves, start=1):
            labels.append(f"{q}#{n}" if split else str(q))
            chars.append(lf.char)
            sources.append(BranchSource(q, lf.index, split))

    r = len(labels)
    contact: list[list[Ext]] = [[INF] * r for _ in range(r)]
    for i in range(r):
        for j in range(i + 1, r):
            si, sj = sources[i], sources[j]
            if si.leaf is None or sj.leaf is None:
                leaf = sj.leaf if si.leaf is None else si.leaf
                other = j if si.leaf is None else i
                value: Ext = Fraction(tree.leaves[leaf].N, chars[other].ord)
            else:
                m = tree.intersection(si.leaf, sj.leaf)
                value = m / (chars[i].ord * chars[j].ord)
            contact[i][j] = contact[j][i] = value
    germ = Germ(tuple(labels), tuple(chars), tuple(tuple(row) for row in contact))
    problems = validate_germ(germ)
    if problems:
        raise AssertionError("extracted germ is invalid: " + "; ".join(problems))
    return PolyGerm(f, reduced, germ, tree, sources, delta_X, notes)


__all__ = [
    "BranchSource",
    "NotAGerm",
    "PolyGerm",
    "UnsupportedBranchShape",
    "extract_branch",
    "germ_from_poly",
    "rational_factors",
]
