"""Invariants of a germ relative to a regular parameter.

A regular parameter is a smooth branch placed against the germ through its
contacts with the germ branches.  From that placement we get the polar
multiplicities attached to balls, the polar quotients, the maximal polar
quotient, the exponent on the polar curve and the special-direction
verdicts.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .branch import CharData
from .eggers import (
    EggersTree,
    EmptyEggers,
    NonsingularGerm,
    build_tree,
    lojasiewicz,
    max_polar_invariant,
    nu_n_of_ball,
    q_of_ball,
    successor_counts,
    tangential_decomposition,
)
from .rational import INF, NEG_INF, Ext, fmt, is_inf
from .space import (
    Ball,
    Chain,
    ExternalBranch,
    Germ,
    InvalidContacts,
    ball,
    chain_of_branch,
    external_violations,
)


class NotSmooth(ValueError):
    pass


class BallNotEligible(ValueError):
    pass


class BranchOfGerm(ValueError):
    pass


def regular_parameter(G: Germ, contacts: Sequence[object], label: str = "lambda") -> ExternalBranch:
    """A smooth probe with the given contacts against the germ branches."""
    return ExternalBranch(CharData.smooth(), tuple(contacts), label=label)


def transversal_parameter(G: Germ, label: str = "transversal") -> ExternalBranch:
    """A smooth probe transversal to every branch."""
    return regular_parameter(G, [1] * G.r, label)


def branch_parameter(G: Germ, index: int, label: str | None = None) -> ExternalBranch:
    """The germ branch ``index`` itself used as the parameter; it must be smooth."""
    contacts = [INF if j == index else G.d(index, j) for j in range(G.r)]
    return ExternalBranch(CharData.smooth(), tuple(contacts), index, label or G.labels[index])


@dataclass(frozen=True)
class Placement:
    germ: Germ
    tree: EggersTree
    lam: ExternalBranch
    chain: Chain

    @property
    def delta(self) -> int:
        return 0 if self.lam.identical_to is None else 1

    @property
    def min_ball(self) -> Ball:
        return self.chain.minimum

    @property
    def max_ball(self) -> Ball:
        """``B_f(lambda)``; infinite exactly when the parameter is a branch."""
        return self.chain.maximum

    @property
    def tilde_ball(self) -> Ball | None:
        """Largest ball ``B(f_i, lambda)`` over branches other than the parameter."""
        if not self.delta:
            return None
        i0 = self.lam.identical_to
        others = [ball(self.germ, i, self.lam.d(i)) for i in range(self.germ.r) if i != i0]
        if not others:
            return None
        return max(others, key=lambda B: (B.radius, B.center))

    def sigma_min(self, B: Ball) -> int:
        return int(B == self.min_ball)

    def sigma_max(self, B: Ball) -> int:
        return int(B == self.max_ball)

    def d_ball(self, B: Ball) -> Ext:
        """Contact of a germ ball with the parameter."""
        return min(self.lam.d(B.center), B.radius)

    @property
    def eligible(self) -> tuple[Ball, ...]:
        balls = set(self.tree.black)
        if self.max_ball.is_finite:
            balls.add(self.max_ball)
        return tuple(sorted(balls, key=lambda B: (B.radius, B.center)))

    @property
    def contact_with_residual(self) -> int:
        """Intersection number of the parameter with the germ minus its own branch."""
        total = sum(
            self.lam.d(i) * self.germ.ord(i)
            for i in range(self.germ.r)
            if i != self.lam.identical_to
        )
        if total.denominator != 1:
            raise InvalidContacts("intersection number with the parameter is not an integer")
        return int(total)

    def tangent_to(self, component: Sequence[int]) -> bool:
        return any(self.lam.d(i) > 1 for i in component)

    @property
    def is_transversal(self) -> bool:
        return all(self.lam.d(i) == 1 for i in range(self.germ.r))


def placement(G: Germ, lam: ExternalBranch, tree: EggersTree | None = None) -> Placement:
    if not lam.char.is_smooth:
        raise NotSmooth(f"{lam.label} is not a regular parameter")
    problems = external_violations(lam, G)
    if problems:
        raise InvalidContacts("; ".join(problems))
    return Placement(G, tree or build_tree(G), lam, chain_of_branch(lam, G))


def q_via_position(h: ExternalBranch, G: Germ, tree: EggersTree | None = None) -> Fraction:
    """Polar invariant of the position ball of ``h``; times ``ord h`` it is ``(f,h)``."""
    P = chain_of_branch(h, G).maximum
    if not P.is_finite:
        raise BranchOfGerm(f"{h.label} is a branch of the germ")
    return q_of_ball(P, G)


def polar_multiplicity(B: Ball, P: Placement) -> int:
    """Intersection number of the parameter with the polar factor attached to ``B``."""
    if B not in P.eligible:
        raise BallNotEligible(f"ball of diameter {fmt(B.radius)} is not eligible")
    T = P.tree
    G = P.germ
    if B in T.data:
        v = T.data[B]
        nu, n, t, t1, t2 = v.nu, v.n, v.t, v.t1, v.t2
    else:
        nu, n = nu_n_of_ball(B, G)
        t, t1, t2 = successor_counts(B, G)
    if B in P.chain:
        value = B.radius * n * (t - 1 + P.sigma_max(B)) - P.sigma_min(B)
    else:
        value = P.d_ball(B) * nu * (t1 + n * t2 - 1)
    if Fraction(value).denominator != 1:
        raise AssertionError("polar multiplicity is not an integer")
    return int(value)


@dataclass(frozen=True)
class BallEntry:
    ball: Ball
    q: Fraction
    d_lambda: Fraction
    m: int


@dataclass(frozen=True)
class PolarExponent:
    """Exponent on the polar curve; ``exact`` is False in the class-dependent case."""

    upper: Fraction
    lower: Fraction
    exact: bool

    @property
    def value(self) -> Fraction:
        if not self.exact:
            raise ValueError("the exponent is not determined by the equisingularity class")
        return self.upper


def ball_entries(P: Placement) -> list[BallEntry]:
    out = []
    for B in P.eligible:
        q = P.tree.data[B].q if B in P.tree.data else q_of_ball(B, P.germ)
        out.append(BallEntry(B, q, P.d_ball(B), polar_multiplicity(B, P)))
    return out


def polar_quotients(P: Placement) -> dict[Fraction, int]:
    """Polar quotients keyed by value, with multiplicities."""
    if not P.germ.is_singular:
        raise NonsingularGerm("the germ is smooth")
    out: Counter = Counter()
    entries = ball_entries(P)
    for e in entries:
        if e.m < 0:
            raise AssertionError(f"negative polar multiplicity at {fmt(e.ball.radius)}")
        if e.m > 0:
            out[e.q / e.d_lambda] += e.m
    total = sum(out.values())
    if total != P.contact_with_residual - 1:
        raise AssertionError(
            f"polar multiplicities sum to {total}, expected {P.contact_with_residual - 1}"
        )
    return dict(sorted(out.items()))


def is_morse(G: Germ) -> bool:
    return G.r == 2 and all(c.is_smooth for c in G.chars) and G.d(0, 1) == 1


def max_polar_quotient(P: Placement) -> Ext:
    """Maximal polar quotient by the case analysis on the tangential components."""
    G, T = P.germ, P.tree
    if not G.is_singular:
        raise NonsingularGerm("the germ is smooth")
    t = len(tangential_decomposition(G))
    E = T.black
    if t == 2 and len(E) == 1:
        if P.delta:
            return NEG_INF
        k = Fraction(P.contact_with_residual)
        return k / (k - 1)
    # with two tangential components the unit ball is either dominated or has no polar branch
    pool = [B for B in E if not (t == 2 and B.radius == 1)]
    return max(T.data[B].q / P.d_ball(B) for B in pool)


def tilde_L(P: Placement) -> Fraction:
    E = P.tree.black
    if not E:
        raise EmptyEggers("the Eggers collection has no finite ball")
    return max(P.tree.data[B].q - P.d_ball(B) for B in E)


def is_exceptional(P: Placement) -> bool:
    """Unitangent germ whose only finite ball is the position of the parameter."""
    t = len(tangential_decomposition(P.germ))
    return t == 1 and P.tree.black == (P.max_ball,)


def lojasiewicz_on_polar(P: Placement) -> PolarExponent:
    if not P.germ.is_singular:
        raise NonsingularGerm("the germ is smooth")
    upper = tilde_L(P)
    q0 = max_polar_quotient(P)
    lower = upper if not is_exceptional(P) else Fraction(q0 - 1)
    return PolarExponent(upper, lower, not is_exceptional(P))


@dataclass(frozen=True)
class DirectionVerdict:
    """Special direction: the tangent of a component, or none when the maximum ties."""

    components: tuple[tuple[int, ...], ...]
    M: tuple[Fraction, ...]
    special: int | None

    @property
    def exists(self) -> bool:
        return self.special is not None


def special_verdict(G: Germ) -> DirectionVerdict:
    if not G.is_singular:
        raise NonsingularGerm("the germ is smooth")
    comps = tuple(tuple(c) for c in tangential_decomposition(G))
    ord_f = G.ord_total
    M = []
    for comp in comps:
        sub = G.subgerm(comp)
        M.append(lojasiewicz(sub) + ord_f - sub.ord_total)
    top = max(M)
    winners = [i for i, v in enumerate(M) if v == top]
    return DirectionVerdict(comps, tuple(M), winners[0] if len(winners) == 1 else None)


def is_special(P: Placement, verdict: DirectionVerdict | None = None) -> bool:
    v = verdict or special_verdict(P.germ)
    if not v.exists:
        return False
    return P.tangent_to(v.components[v.special])


@dataclass(frozen=True)
class InequalityFlags:
    L0: Fraction
    L_polar: PolarExponent
    q0_f: Fraction
    q0_lambda: Ext
    morse: bool

    @property
    def left_holds(self) -> bool:
        return self.L0 >= self.L_polar.upper

    @property
    def right_holds(self) -> bool:
        return is_inf(self.q0_lambda) or self.L_polar.lower >= self.q0_lambda - 1

    @property
    def left_strict(self) -> bool:
        return self.L0 > self.L_polar.upper

    @property
    def right_strict(self) -> bool:
        return is_inf(self.q0_lambda) or self.L_polar.lower > self.q0_lambda - 1

    @property
    def equal_L(self) -> bool:
        return self.L_polar.exact and self.L0 == self.L_polar.upper

    @property
    def equal_q(self) -> bool:
        return self.q0_f == self.q0_lambda

    @property
    def consistent(self) -> bool:
        """Both equalities hold for the same parameters unless the germ is Morse."""
        return self.morse or self.equal_L == self.equal_q


def inequality_flags(P: Placement) -> InequalityFlags:
    G = P.germ
    flags = InequalityFlags(
        lojasiewicz(G, P.tree),
        lojasiewicz_on_polar(P),
        max_polar_invariant(G, P.tree),
        max_polar_quotient(P),
        is_morse(G),
    )
    if not (flags.left_holds and flags.right_holds):
        raise AssertionError("exponent inequalities fail")
    return flags


@dataclass(frozen=True)
class PolarReport:
    lam: ExternalBranch
    entries: tuple[BallEntry, ...]
    quotients: dict
    q0: Ext
    tilde_L: Fraction
    L_on_polar: PolarExponent
    is_special: bool
    flags: InequalityFlags
    placement: Placement


def polar_report(G: Germ, lam: ExternalBranch, tree: EggersTree | None = None) -> PolarReport:
    P = placement(G, lam, tree)
    Q = polar_quotients(P)
    q0 = max_polar_quotient(P)
    by_quotients = max(Q) if Q else NEG_INF
    if by_quotients != q0:
        raise AssertionError(
            f"maximal polar quotient {fmt(q0)} differs from max of quotients {fmt(by_quotients)}"
        )
    return PolarReport(
        lam,
        tuple(ball_entries(P)),
        Q,
        q0,
        tilde_L(P),
        lojasiewicz_on_polar(P),
        is_special(P),
        inequality_flags(P),
        P,
    )


__all__ = [
    "BallEntry",
    "BallNotEligible",
    "BranchOfGerm",
    "DirectionVerdict",
    "InequalityFlags",
    "NotSmooth",
    "Placement",
    "PolarExponent",
    "PolarReport",
    "ball_entries",
    "branch_parameter",
    "is_exceptional",
    "is_morse",
    "is_special",
    "lojasiewicz_on_polar",
    "max_polar_quotient",
    "placement",
    "polar_multiplicity",
    "polar_quotients",
    "polar_report",
    "q_via_position",
    "regular_parameter",
    "special_verdict",
    "inequality_flags",
    "tilde_L",
    "transversal_parameter",
]
