"""Cross-check the combinatorial pipeline against the polynomial itself.

With ``lambda = X`` the polar factorization predicts, per eligible ball,
how many roots of the Y-derivative land there.  The derivative ledger
counts the same roots directly from Newton polygons.  Further checks
compare the chain of X, successor counts of the track balls, and contacts
recomputed by intersection multiplicities.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..eggers import EggersTree, build_tree, nu_n_of_ball, successor_counts
from ..rational import INF, Ext, fmt
from ..space import Ball, Germ, ball_members, validate_germ
from .germ import PolyGerm, germ_from_poly
from .intersection import intersection_mult
from .ledger import NewtonLedger, assign_balls, derivative_ledger
from .poly import BiPoly
from ..polar import Placement, placement, polar_multiplicity, regular_parameter


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    expected: str
    actual: str


@dataclass
class VerificationReport:
    poly: str
    labels: tuple[str, ...]
    checks: list[Check] = field(default_factory=list)
    delta_X: int = 0
    bound_only: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def add(self, name: str, expected, actual) -> None:
        self.checks.append(Check(name, expected == actual, _show(expected), _show(actual)))


class MismatchReport(AssertionError):
    def __init__(self, report: VerificationReport):
        names = ", ".join(c.name for c in report.failures)
        super().__init__(f"cross-verification failed: {names}")
        self.report = report


def _show(value) -> str:
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_show(v)}" for k, v in value.items()) + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_show(v) for v in value) + "]"
    if isinstance(value, (Fraction, int, float)):
        return fmt(value)
    return str(value)


def _ball_text(B: Ball, G: Germ) -> str:
    return f"B({G.labels[B.center]}, {fmt(B.radius)})"


def _min_chain_by_polygon(pg: PolyGerm, xs) -> Ball:
    incl = [S.theta for S in pg.tree.root.faces] if pg.tree else []
    top = max(incl) if incl else None
    if pg.tree is not None and pg.tree.root.exact_leaf is not None:
        top = INF
    if top is not None and top < 1:
        R = 1 / top
        members = [i for i, v in enumerate(xs) if v >= R]
        return Ball(members[0], R)
    return Ball(0, Fraction(1))


def _position_of_X_by_polygon(pg: PolyGerm, xs) -> Ball:
    if pg.delta_X:
        return Ball(pg.germ.index("X"), INF)
    incl = [S.theta for S in pg.tree.root.faces]
    if pg.tree.root.exact_leaf is not None:
        incl.append(INF)
    low = min(incl)
    if low < 1:
        R = 1 / low
        members = [i for i, v in enumerate(xs) if v >= R]
        return Ball(members[0], R)
    return Ball(0, Fraction(1))


def _successor_checks(report: VerificationReport, pg: PolyGerm, ledger: NewtonLedger) -> None:
    """Direct-successor counts of track balls read off the face polynomials."""
    G = pg.germ
    nodes = list(pg.tree.nodes()) if pg.tree else []
    entries = iter(ledger.entries)
    for node in nodes:
        for face in node.faces:
            e = next(entries)
            B = e.ball
            if B is None or e.case == "I":
                continue
            _nu, n = nu_n_of_ball(B, G)
            eps_side = face.eps_Y
            if e.case == "II":
                eps_side = 1 if (pg.delta_X or face is not node.faces[0]) else 0
            if n == 1:
                predicted = (face.r0 + eps_side, 0)
            else:
                predicted = (eps_side, face.r0)
            _t, t1, t2 = successor_counts(B, G)
            report.add(
                f"successors of {_ball_text(B, G)} (track {node.text}, face {fmt(face.theta)})",
                predicted,
                (t1, t2),
            )


def _contact_checks(report: VerificationReport, pg: PolyGerm) -> None:
    """Contacts of unsplit factors recomputed by intersection multiplicities."""
    G = pg.germ
    whole = [i for i, s in enumerate(pg.sources) if not s.split]
    for a, i in enumerate(whole):
        Fi = pg.sources[i].factor
        for j in whole[a + 1:]:
            Fj = pg.sources[j].factor
            expected = G.d(i, j) * G.ord(i) * G.ord(j)
            report.add(
                f"intersection ({G.labels[i]}, {G.labels[j]})",
                expected,
                intersection_mult(Fi, Fj, bound=_cap(expected)),
            )
        if pg.sources[i].leaf is not None:
            report.add(
                f"intersection ({G.labels[i]}, X)",
                pg.x_contacts()[i] * G.ord(i),
                intersection_mult(Fi, BiPoly.X()),
            )


def _cap(expected: Ext) -> int | None:
    """Truncation degree that still distinguishes ``expected`` from anything else."""
    return None if expected == INF else int(expected) + 1


def cross_verify(
    f: BiPoly,
    germ: Germ | None = None,
    raise_on_failure: bool = True,
    factors: Sequence[BiPoly] | None = None,
) -> VerificationReport:
    """Run both pipelines with ``lambda = X`` and compare them.

    ``germ`` overrides the combinatorial input; its labels must match the
    extracted branches.  Raises :class:`MismatchReport` on any failed check
    unless ``raise_on_failure`` is False.
    """
    pg = germ_from_poly(f, factors)
    report = VerificationReport(str(f), pg.germ.labels, delta_X=pg.delta_X, notes=list(pg.notes))
    G = pg.germ
    if germ is not None:
        if sorted(germ.labels) != sorted(G.labels):
            report.add("branch labels", sorted(G.labels), sorted(germ.labels))
            return _finish(report, raise_on_failure)
        problems = validate_germ(germ)
        report.add("supplied germ is valid", [], problems)
        if problems:
            return _finish(report, raise_on_failure)
        G = germ.permuted([germ.index(lb) for lb in pg.germ.labels])
        for i in range(G.r):
            report.add(f"type of {G.labels[i]}", pg.germ.chars[i], G.chars[i])
            for j in range(i + 1, G.r):
                report.add(
                    f"contact ({G.labels[i]}, {G.labels[j]})", pg.germ.d(i, j), G.d(i, j)
                )

    xs = pg.x_contacts()
    ledger = derivative_ledger(pg)
    report.add("ledger total = ord f~(0,Y) - 1", max(pg.p - 1, 0), ledger.total)
    if not G.is_singular:
        report.notes.append("germ is nonsingular; polar checks skipped")
        return _finish(report, raise_on_failure)

    tree: EggersTree = build_tree(G)
    lam = regular_parameter(G, xs, "X")
    P: Placement = placement(G, lam, tree)
    assign_balls(ledger, P.min_ball)
    report.bound_only = ledger.bound_total

    predicted = {}
    for B in P.eligible:
        m = polar_multiplicity(B, P)
        if m:
            predicted[_ball_text(B, G)] = m
    counted = {_ball_text(B, G): m for B, m in ledger.per_ball.items() if m}
    report.add("per-ball polar multiplicities", dict(sorted(predicted.items())), dict(sorted(counted.items())))
    report.add("total polar multiplicity", P.contact_with_residual - 1, ledger.total)

    if pg.tree is not None:
        report.add("smallest ball of the chain of X", _ball_text(P.min_ball, G), _ball_text(_min_chain_by_polygon(pg, xs), G))
        pos = _position_of_X_by_polygon(pg, xs)
        report.add(
            "position ball of X",
            (sorted(ball_members(P.max_ball, G)), P.max_ball.radius),
            (sorted(ball_members(pos, G)), pos.radius),
        )
        _successor_checks(report, pg, ledger)
    _contact_checks(report, pg)
    return _finish(report, raise_on_failure)


def _finish(report: VerificationReport, raise_on_failure: bool) -> VerificationReport:
    if raise_on_failure and not report.passed:
        raise MismatchReport(report)
    return report


__all__ = ["Check", "MismatchReport", "VerificationReport", "cross_verify"]
