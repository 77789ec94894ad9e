"""Newton polygons and face statistics."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import BiPoly, TrackPoly, _Poly2
from .univariate import squarefree_degree, to_sympy


class ZeroPolynomial(ValueError):
    pass


class FaceNotOnPolygon(ValueError):
    pass


@dataclass(frozen=True)
class Face:
    """Compact face from ``hi`` (upper left) to ``lo`` (lower right)."""

    hi: tuple[Fraction, int]
    lo: tuple[Fraction, int]

    @property
    def width(self) -> Fraction:
        return Fraction(self.lo[0] - self.hi[0])

    @property
    def height(self) -> int:
        return self.hi[1] - self.lo[1]

    @property
    def incl(self) -> Fraction:
        return self.width / self.height

    @property
    def eps(self) -> int:
        """-1 when the face touches the horizontal axis, else 0."""
        return -1 if self.lo[1] == 0 else 0

    def contains(self, alpha, beta) -> bool:
        a0, b0 = self.hi
        return self.lo[1] <= beta <= b0 and (alpha - a0) * self.height == (b0 - beta) * self.width


@dataclass(frozen=True)
class Polygon:
    faces: tuple[Face, ...]
    delta_X: Fraction
    delta_Y: int

    @property
    def inclinations(self) -> tuple[Fraction, ...]:
        return tuple(S.incl for S in self.faces)


def newton_polygon(f: _Poly2, threshold: Fraction | None = None) -> Polygon:
    """Compact faces of the Newton diagram with inclination above ``threshold``.

    ``threshold=None`` keeps every face.
    """
    if f.is_zero:
        raise ZeroPolynomial("the zero polynomial has no Newton polygon")
    pts = list(f.terms)
    dX = min(a for a, _ in pts)
    dY = min(b for _, b in pts)
    cur = min(pts, key=lambda p: (p[0], p[1]))
    faces = []
    while cur[1] > dY:
        below = [p for p in pts if p[1] < cur[1]]
        best = min(below, key=lambda p: (Fraction(p[0] - cur[0]) / (cur[1] - p[1]), p[1]))
        faces.append(Face((Fraction(cur[0]), cur[1]), (Fraction(best[0]), best[1])))
        cur = best
    if threshold is not None:
        faces = [S for S in faces if S.incl > threshold]
    return Polygon(tuple(faces), Fraction(dX), dY)


@dataclass(frozen=True)
class FaceStats:
    inform: _Poly2
    t: int
    d: int
    eps_X: int
    eps_Y: int


def face_stats(f: _Poly2, S: Face) -> FaceStats:
    """Initial form on ``S``, its distinct-root count and degeneracy defect."""
    if S not in newton_polygon(f).faces:
        raise FaceNotOnPolygon(f"{S} is not a face of the Newton polygon")
    inform = type(f)({k: c for k, c in f.terms.items() if S.contains(*k)})
    coeffs: dict[int, Fraction] = {}
    for (_, b), c in inform.terms.items():
        coeffs[b] = coeffs.get(b, 0) + c
    t = squarefree_degree(to_sympy(coeffs))
    d = S.height + S.eps - t + 1
    eps_X = 1 if S.hi[0] > 0 else 0
    eps_Y = 1 if S.lo[1] > 0 else 0
    return FaceStats(inform, t, d, eps_X, eps_Y)


__all__ = [
    "Face",
    "FaceNotOnPolygon",
    "FaceStats",
    "Polygon",
    "ZeroPolynomial",
    "face_stats",
    "newton_polygon",
]
