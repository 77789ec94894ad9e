"""Counting roots of the Y-derivative face by face along the track tree.

Each entry records, for one track and one face of its polygon, how many
derivative roots attach to that face and which germ ball they sit in.
Roots of the second kind on the root track below inclination 1 only obey a
strict upper bound; they are kept apart and charged to the smallest ball
of the chain of X, which is where the polar factorization collects them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..branch import GenCharSeq, alpha_of_kappa, char_diagram
from ..rational import Ext, fmt
from ..space import Ball
from .germ import PolyGerm
from .poly import BiPoly
from .polygon import face_stats, newton_polygon
from .tracks import FaceData, Node

EXACT = "exact"
BOUND = "bound"


@dataclass(frozen=True)
class LedgerEntry:
    track: str
    copies: int
    theta: Fraction
    t: int
    first_kind: int
    second_kind: int
    case: str
    radius: Ext
    ball: Ball | None = None
    bound_ball: Ball | None = None

    @property
    def count(self) -> int:
        return self.copies * (self.t - 1)

    @property
    def exact_count(self) -> int:
        """Roots whose ball is pinned down exactly."""
        if self.bound_ball is None:
            return self.count
        return self.copies * self.first_kind

    @property
    def bound_count(self) -> int:
        return self.count - self.exact_count


@dataclass
class NewtonLedger:
    entries: list[LedgerEntry]
    p: int
    partial: bool = False
    per_ball: dict[Ball, int] = field(default_factory=dict)
    bound_total: int = 0

    @property
    def total(self) -> int:
        return sum(e.count for e in self.entries)

    @property
    def conserved(self) -> bool:
        return self.total == max(self.p - 1, 0)


def _members(contacts, radius) -> list[int]:
    return [i for i, v in enumerate(contacts) if v >= radius]


def _ball(contacts, radius) -> Ball | None:
    members = _members(contacts, radius)
    return Ball(members[0], radius) if members else None


def track_radius(node: Node, theta: Fraction) -> Fraction:
    """Diameter of the ball of roots branching off ``phi`` at order ``theta``."""
    D = char_diagram(GenCharSeq(node.gen_char))
    return Fraction(node.N, node.ord) * alpha_of_kappa(D, theta)


def _entry(pg: PolyGerm, node: Node, face: FaceData) -> LedgerEntry:
    theta = face.theta
    common = dict(
        track=node.text,
        copies=node.N,
        theta=theta,
        t=face.t,
        first_kind=face.first_kind,
        second_kind=face.second_kind,
    )
    if node.phi:
        R = track_radius(node, theta)
        return LedgerEntry(case="IV", radius=R, ball=_ball(pg.node_contacts(node), R), **common)
    if theta == 1:
        return LedgerEntry(case="I", radius=Fraction(1), ball=Ball(0, Fraction(1)), **common)
    if theta < 1:
        R = 1 / theta
        B = _ball(pg.x_contacts(), R)
        bound = B if face.second_kind else None
        return LedgerEntry(case="II", radius=R, ball=B, bound_ball=bound, **common)
    return LedgerEntry(case="III", radius=theta, ball=_ball(pg.line_contacts(Fraction(0)), theta), **common)


def derivative_ledger(pg: PolyGerm) -> NewtonLedger:
    """Ledger of the derivative roots of ``f~`` with their germ balls."""
    entries = []
    if pg.tree is not None:
        for node in pg.tree.nodes():
            for face in node.faces:
                entries.append(_entry(pg, node, face))
    ledger = NewtonLedger(entries, pg.p)
    if not ledger.conserved:
        raise AssertionError(f"ledger total {ledger.total} != {pg.p} - 1")
    return ledger


def assign_balls(ledger: NewtonLedger, min_chain_ball: Ball) -> NewtonLedger:
    """Sum exact counts per ball and charge bound-only counts to ``min_chain_ball``."""
    per_ball: dict[Ball, int] = {}
    bound = 0
    for e in ledger.entries:
        if e.exact_count:
            if e.ball is None:
                raise AssertionError(f"entry at {e.track}, {fmt(e.theta)} has an empty ball")
            per_ball[e.ball] = per_ball.get(e.ball, 0) + e.exact_count
        bound += e.bound_count
    if bound:
        per_ball[min_chain_ball] = per_ball.get(min_chain_ball, 0) + bound
    ledger.per_ball = per_ball
    ledger.bound_total = bound
    return ledger


def partial_ledger(f: BiPoly) -> NewtonLedger:
    """First Newton step only: per root face, the counts ``t - 1`` and ``d``.

    Used when the track tree cannot be expanded; the total still equals
    ``p - 1`` because deeper roots are counted in bulk by ``d``.
    """
    reduced = f
    while reduced.y_order_on_axis() is None:
        reduced = BiPoly({(a - 1, b): c for (a, b), c in reduced.terms.items()})
    entries = []
    for S in newton_polygon(reduced).faces:
        st = face_stats(reduced, S)
        case = "I" if S.incl == 1 else "II" if S.incl < 1 else "III"
        entries.append(
            LedgerEntry(str(0), 1, S.incl, st.t, st.t - 1, 0, case, S.incl)
        )
        if st.d:
            entries.append(LedgerEntry("deeper", 1, S.incl, st.d + 1, st.d, 0, "deep", S.incl))
    p = reduced.y_order_on_axis()
    ledger = NewtonLedger(entries, p, partial=True)
    if not ledger.conserved:
        raise AssertionError(f"first-step total {ledger.total} != {p} - 1")
    return ledger


__all__ = [
    "LedgerEntry",
    "NewtonLedger",
    "assign_balls",
    "derivative_ledger",
    "partial_ledger",
    "track_radius",
]
