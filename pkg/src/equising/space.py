"""Finite pieces of the ultrametric space of branches.

A :class:`Germ` is a list of branch types together with the symmetric
matrix of contact orders.  Balls are canonicalised to the least germ index
they contain, so two balls are equal exactly when their dataclass values
are equal.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .branch import CharData, _char_violations
from .rational import INF, Ext, ext, fmt, is_inf


class InvalidContacts(ValueError):
    pass


@dataclass(frozen=True)
class Germ:
    """Equisingularity data of a reduced plane curve germ."""

    labels: tuple[str, ...]
    chars: tuple[CharData, ...]
    contact: tuple[tuple[Ext, ...], ...]

    def __post_init__(self) -> None:
        if not (len(self.labels) == len(self.chars) == len(self.contact)):
            raise InvalidContacts("labels, chars and contact rows differ in length")
        rows = tuple(tuple(ext(v) for v in row) for row in self.contact)
        if any(len(row) != len(rows) for row in rows):
            raise InvalidContacts("contact matrix is not square")
        object.__setattr__(self, "contact", rows)
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "chars", tuple(self.chars))

    @classmethod
    def from_pairs(
        cls,
        labels: Sequence[str],
        chars: Sequence[CharData],
        pairs: Mapping[tuple[int, int], object],
    ) -> "Germ":
        r = len(labels)
        m: list[list[Ext]] = [[INF] * r for _ in range(r)]
        for (i, j), v in pairs.items():
            m[i][j] = m[j][i] = ext(v)
        for i, j in combinations(range(r), 2):
            if (i, j) not in pairs and (j, i) not in pairs:
                raise InvalidContacts(f"missing contact for {labels[i]}, {labels[j]}")
        return cls(tuple(labels), tuple(chars), tuple(tuple(row) for row in m))

    @property
    def r(self) -> int:
        return len(self.labels)

    def d(self, i: int, j: int) -> Ext:
        return self.contact[i][j]

    def ord(self, i: int) -> int:
        return self.chars[i].ord

    @property
    def ord_total(self) -> int:
        return sum(c.ord for c in self.chars)

    @property
    def is_singular(self) -> bool:
        return self.ord_total >= 2

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown branch label {label!r}") from None

    def subgerm(self, indices: Iterable[int]) -> "Germ":
        idx = sorted(indices)
        return Germ(
            tuple(self.labels[i] for i in idx),
            tuple(self.chars[i] for i in idx),
            tuple(tuple(self.contact[i][j] for j in idx) for i in idx),
        )

    def permuted(self, order: Sequence[int]) -> "Germ":
        return Germ(
            tuple(self.labels[i] for i in order),
            tuple(self.chars[i] for i in order),
            tuple(tuple(self.contact[i][j] for j in order) for i in order),
        )


def validate_germ(G: Germ) -> list[str]:
    """Every failed axiom, each naming the offending branches."""
    out: list[str] = []
    L = G.labels
    r = G.r
    if len(set(L)) != r:
        out.append("branch labels are not distinct")
    for i in range(r):
        for problem in _char_violations(G.chars[i]):
            out.append(f"{L[i]}: {problem}")
        if not is_inf(G.d(i, i)):
            out.append(f"D1: d({L[i]},{L[i]}) must be infinite")
    for i, j in combinations(range(r), 2):
        a, b = G.d(i, j), G.d(j, i)
        if a != b:
            out.append(f"symmetry: d({L[i]},{L[j]}) = {fmt(a)} but d({L[j]},{L[i]}) = {fmt(b)}")
        if is_inf(a):
            out.append(f"D1: distinct branches {L[i]}, {L[j]} have infinite contact")
        elif a < 1:
            out.append(f"d({L[i]},{L[j]}) = {fmt(a)} is below 1")
    if out:
        return out
    for i, j, k in combinations(range(r), 3):
        vals = sorted([G.d(i, j), G.d(i, k), G.d(j, k)])
        if vals[0] != vals[1]:
            out.append(
                f"D3: triangle ({L[i]},{L[j]},{L[k]}) has distances "
                + ", ".join(fmt(v) for v in (G.d(i, j), G.d(i, k), G.d(j, k)))
            )
    for i, j in combinations(range(r), 2):
        dij = G.d(i, j)
        below_i = [c for c in G.chars[i].contacts if c < dij]
        below_j = [c for c in G.chars[j].contacts if c < dij]
        if below_i != below_j:
            out.append(
                f"char-compatibility: {L[i]} and {L[j]} disagree below {fmt(dij)}"
            )
            continue
        nu = G.chars[i].nu_below(dij)
        n = Fraction(dij * nu * nu).denominator
        if n > 1 and dij not in G.chars[i].contacts and dij not in G.chars[j].contacts:
            out.append(
                f"realizability: characteristic contact {fmt(dij)} of {L[i]},{L[j]} "
                "is a characteristic contact of neither branch"
            )
    return out


@dataclass(frozen=True)
class ExternalBranch:
    """A branch outside the germ, known by its type and contacts with the germ."""

    char: CharData
    contacts: tuple[Ext, ...]
    identical_to: int | None = None
    label: str = "h"

    def __post_init__(self) -> None:
        object.__setattr__(self, "contacts", tuple(ext(v) for v in self.contacts))
        if self.identical_to is None:
            hits = [i for i, v in enumerate(self.contacts) if is_inf(v)]
            if len(hits) > 1:
                raise InvalidContacts("a branch cannot coincide with two germ branches")
            if hits:
                object.__setattr__(self, "identical_to", hits[0])

    def d(self, i: int) -> Ext:
        return self.contacts[i]


def external_violations(h: ExternalBranch, G: Germ) -> list[str]:
    """Validate the joint matrix of ``G`` with ``h`` appended."""
    if len(h.contacts) != G.r:
        return [f"{h.label}: expected {G.r} contacts, got {len(h.contacts)}"]
    if h.identical_to is not None:
        i = h.identical_to
        out = []
        if h.char != G.chars[i]:
            out.append(f"{h.label} is identified with {G.labels[i]} but has another type")
        for j in range(G.r):
            want = INF if j == i else G.d(i, j)
            if h.contacts[j] != want:
                out.append(f"{h.label} is identified with {G.labels[i]} but d(·,{G.labels[j]}) differs")
        return out
    extra = h.label
    while extra in G.labels:
        extra += "'"
    labels = G.labels + (extra,)
    chars = G.chars + (h.char,)
    rows = [list(row) + [h.contacts[i]] for i, row in enumerate(G.contact)]
    rows.append(list(h.contacts) + [INF])
    joint = Germ(labels, chars, tuple(tuple(r) for r in rows))
    return validate_germ(joint)


@dataclass(frozen=True)
class Ball:
    """Ball of a given radius around a germ branch index or an external branch."""

    center: object
    radius: Ext

    @property
    def is_finite(self) -> bool:
        return not is_inf(self.radius)


def _center_distance(a: object, b: object, G: Germ) -> Ext:
    if isinstance(a, int) and isinstance(b, int):
        return G.d(a, b)
    if isinstance(a, int) and isinstance(b, ExternalBranch):
        return b.d(a)
    if isinstance(a, ExternalBranch) and isinstance(b, int):
        return a.d(b)
    if a == b:
        return INF
    raise ValueError("distance between two distinct external branches is unknown")


def ball(G: Germ, center: int, radius: object) -> Ball:
    """Canonical germ ball: centred at the least germ index it contains."""
    R = ext(radius)
    if not is_inf(R) and R < 1:
        raise ValueError("radius must be at least 1")
    j = min(k for k in range(G.r) if G.d(center, k) >= R)
    return Ball(j, R)


def canonical(B: Ball, G: Germ) -> Ball:
    """Re-centre a ball at the least germ index it contains, when it contains one."""
    members = ball_members(B, G)
    return Ball(members[0], B.radius) if members else B


def ball_members(B: Ball, G: Germ) -> list[int]:
    return [k for k in range(G.r) if _center_distance(B.center, k, G) >= B.radius]


def balls_intersect(B1: Ball, B2: Ball, G: Germ) -> bool:
    return not (min(B1.radius, B2.radius) > _center_distance(B1.center, B2.center, G))


class Cmp(enum.Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"
    INCOMPARABLE = "Incomparable"


def ball_cmp(B1: Ball, B2: Ball, G: Germ) -> Cmp:
    dc = _center_distance(B1.center, B2.center, G)
    R1, R2 = B1.radius, B2.radius
    if R1 == R2 and R1 <= dc:
        return Cmp.EQUAL
    if R1 < R2 and R1 <= dc:
        return Cmp.LESS
    if R2 < R1 and R2 <= dc:
        return Cmp.GREATER
    return Cmp.INCOMPARABLE


def dist_ball_branch(B: Ball, h: ExternalBranch | int, G: Germ) -> Ext:
    return min(_center_distance(B.center, h, G), B.radius)


@dataclass(frozen=True)
class Chain:
    """The chain of balls ``B(f_i, d(f_i, h))`` ordered by radius."""

    balls: tuple[Ball, ...]

    @property
    def minimum(self) -> Ball:
        return self.balls[0]

    @property
    def maximum(self) -> Ball:
        return self.balls[-1]

    def __contains__(self, B: object) -> bool:
        return B in self.balls


def chain_of_branch(h: ExternalBranch, G: Germ) -> Chain:
    found = {ball(G, i, h.d(i)) for i in range(G.r)}
    ordered = sorted(found, key=lambda b: (b.radius, b.center))
    for a, b in zip(ordered, ordered[1:]):
        if ball_cmp(a, b, G) is not Cmp.LESS:
            raise InvalidContacts(f"{h.label}: chain balls are not nested")
    return Chain(tuple(ordered))


def position_ball(h: ExternalBranch, G: Germ) -> Ball:
    """``B_f(h)``: the largest ball of the chain of ``h``."""
    return chain_of_branch(h, G).maximum


def dist_via_germ(g: ExternalBranch, h: ExternalBranch, G: Germ) -> Ext:
    """Contact of two external branches as seen through the germ."""
    value = max(min(g.d(i), h.d(i)) for i in range(G.r))
    Bg, Bh = position_ball(g, G), position_ball(h, G)
    via_g = min(h.d(Bg.center), Bg.radius)
    via_h = min(g.d(Bh.center), Bh.radius)
    if not (value == via_g == via_h):
        raise AssertionError(
            f"germ distance {fmt(value)} disagrees with ball distances {fmt(via_g)}, {fmt(via_h)}"
        )
    return value


__all__ = [
    "Ball",
    "Chain",
    "Cmp",
    "ExternalBranch",
    "Germ",
    "InvalidContacts",
    "ball",
    "ball_cmp",
    "ball_members",
    "balls_intersect",
    "canonical",
    "chain_of_branch",
    "dist_ball_branch",
    "dist_via_germ",
    "external_violations",
    "position_ball",
    "validate_germ",
]
