"""Newton-Puiseux tree of a reduced polynomial, one node per rational track.

Each node holds a Puiseux polynomial ``phi`` and, for every rational factor
of ``f`` with roots continuing ``phi``, the shifted polynomial
``F(X, Y + phi)``.  Faces of the joint polygon above ``deg phi`` are split
into root groups, keyed by an irreducible rational factor of the face
polynomial.  A simple group yields branches; a multiple group must have a
rational root and spawns a child node.  Conjugate tracks are represented
once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

import sympy

from ..branch import CharData, GenCharSeq, gen_char_to_char
from ..rational import INF, Ext, fmt
from .poly import BiPoly, TrackPoly
from .polygon import newton_polygon
from .univariate import (
    Z,
    key_to_sympy,
    monic_factors,
    rational_root,
    squarefree_degree,
    to_sympy,
)

Ysym = sympy.Symbol("Y")


class NonReduced(ValueError):
    """The polynomial has a repeated factor."""


class IrrationalTrackRoot(ArithmeticError):
    """A multiple root of a face polynomial is not rational."""

    def __init__(self, phi: str, theta: Fraction, minpoly: str):
        super().__init__(
            f"track {phi}, face of inclination {fmt(theta)}: multiple root with "
            f"minimal polynomial {minpoly} is not rational"
        )
        self.phi = phi
        self.theta = theta
        self.minpoly = minpoly


def format_track(phi: Sequence[tuple[Fraction, Fraction]]) -> str:
    if not phi:
        return "0"
    parts = []
    for a, e in phi:
        mono = "X" if e == 1 else f"X^{fmt(e) if e.denominator == 1 else '(' + fmt(e) + ')'}"
        coef = "" if a == 1 else "-" if a == -1 else f"{fmt(a)}*"
        parts.append(f"{coef}{mono}")
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


@dataclass(eq=False)
class Group:
    """Roots on one face sharing the irreducible factor ``key`` of the face polynomial."""

    key: tuple[Fraction, ...]
    mult: int
    per_factor: dict[int, int]
    nbar: int
    child: "Node | None" = None
    leaves: list[int] = field(default_factory=list)

    @property
    def deg(self) -> int:
        return len(self.key) - 1

    @property
    def z_root(self) -> Fraction | None:
        """The face-polynomial root when it is rational."""
        return -self.key[1] if self.deg == 1 else None

    def root_count(self, leaf: int) -> int:
        if self.child is not None:
            return self.nbar * self.child.counts.get(leaf, 0)
        return self.nbar * self.leaves.count(leaf)


@dataclass(eq=False)
class FaceData:
    theta: Fraction
    nbar: int
    height: int
    beta_low: int
    beta_high: int
    beta_minpos: int
    t: int
    d: int
    groups: list[Group]
    eps_Y: int

    @property
    def touches_axis(self) -> bool:
        return self.beta_low == 0

    @property
    def r0(self) -> int:
        return sum(g.deg for g in self.groups)

    @property
    def count(self) -> int:
        """Derivative roots attached to this face for one copy of the track."""
        return self.t - 1

    @property
    def first_kind(self) -> int:
        if not self.touches_axis:
            return self.count
        return self.beta_high - self.beta_minpos - self.d

    @property
    def second_kind(self) -> int:
        return self.count - self.first_kind


@dataclass(eq=False)
class Node:
    phi: tuple[tuple[Fraction, Fraction], ...]
    N: int
    polys: dict[int, TrackPoly]
    e: int
    steps: tuple[tuple["Node", FaceData, Group], ...] = ()
    faces: list[FaceData] = field(default_factory=list)
    exact_leaf: int | None = None
    counts: dict[int, int] = field(default_factory=dict)

    @property
    def deg(self) -> Fraction:
        return self.phi[-1][1] if self.phi else Fraction(0)

    @property
    def text(self) -> str:
        return format_track(self.phi)

    @property
    def gen_char(self) -> tuple[int, ...]:
        return _gen_char(self.N, self.steps)

    @property
    def ord(self) -> int:
        """Order of the branch parametrised by ``phi`` itself."""
        if not self.steps:
            return 1
        return min(self.N, int(self.N * self.steps[0][1].theta))


@dataclass(eq=False)
class Leaf:
    index: int
    factor: int
    node: Node
    face: FaceData | None
    group: Group | None
    N: int
    gen_char: tuple[int, ...]
    ord: int
    char: CharData


def _gen_char(N: int, steps) -> tuple[int, ...]:
    out = [N]
    for _, face, _g in steps:
        if face.nbar > 1:
            out.append(int(face.theta * N))
    return tuple(out)


@dataclass(eq=False)
class NewtonTree:
    root: Node
    leaves: list[Leaf]
    factors: list[BiPoly]

    def nodes(self) -> Iterator[Node]:
        stack = [self.root]
        while stack:
            node = stack.pop(0)
            yield node
            for face in node.faces:
                for g in face.groups:
                    if g.child is not None:
                        stack.append(g.child)

    def leaves_of(self, factor: int) -> list[Leaf]:
        return [lf for lf in self.leaves if lf.factor == factor]

    # -------------------------------------------------------- contact sums

    def _step_sum(self, leaf: int, node: Node, face: FaceData, group: Group | None) -> Fraction:
        """Roots of ``leaf`` at ``node`` leaving a target that follows ``group`` on ``face``."""
        total = Fraction(0)
        for f2 in node.faces:
            for g in f2.groups:
                c = g.root_count(leaf)
                if g is group:
                    if g.child is not None:
                        c -= g.child.counts.get(leaf, 0)
                    else:
                        c = 0  # leaf groups are handled by the caller
                total += c * min(f2.theta, face.theta)
        if node.exact_leaf == leaf:
            total += face.theta
        return total

    def _path_sum(self, leaf: int, steps) -> Fraction:
        return sum((self._step_sum(leaf, n, f, g) for n, f, g in steps), Fraction(0))

    def _node_sum(self, leaf: int, node: Node) -> Ext:
        """Sum of ``ord(y - phi)`` over roots ``y`` of ``leaf``, for roots continuing ``phi``."""
        if node.exact_leaf == leaf:
            return INF
        total = Fraction(0)
        for f2 in node.faces:
            for g in f2.groups:
                total += g.root_count(leaf) * f2.theta
        return total

    def root_sum(self, i: int, j: int) -> Ext:
        """Sum of ``ord(y - z)`` over roots ``y`` of leaf ``i``, for one root ``z`` of leaf ``j``."""
        if i == j:
            return INF
        target = self.leaves[j]
        if target.face is None:
            node = target.node
            return self._path_sum(i, node.steps) + self._node_sum(i, node)
        node, face, group = target.node, target.face, target.group
        total = self._path_sum(i, node.steps) + self._step_sum(i, node, face, group)
        total += group.nbar * group.leaves.count(i) * face.theta
        return total

    def intersection(self, i: int, j: int) -> Ext:
        """Intersection multiplicity of two branches."""
        s = self.root_sum(i, j)
        if s == INF:
            return INF
        value = self.leaves[j].N * s
        other = self.leaves[i].N * self.root_sum(j, i)
        if value != other:
            raise AssertionError(f"contact sums disagree for leaves {i}, {j}: {value} != {other}")
        return value

    def node_intersection(self, i: int, node: Node) -> Ext:
        """Intersection multiplicity of leaf ``i`` with the branch ``[phi]``."""
        s = self._path_sum(i, node.steps) + self._node_sum(i, node)
        return INF if s == INF else node.N * s

    def line_intersection(self, i: int, slope: Fraction) -> Ext:
        """Intersection multiplicity of leaf ``i`` with the line ``Y = slope * X``."""
        slope = Fraction(slope)
        root = self.root
        if slope == 0:
            return self._node_sum(i, root)
        total = Fraction(0)
        match = None
        for f2 in root.faces:
            for g in f2.groups:
                if f2.theta == 1 and g.z_root == slope:
                    match = g
                    continue
                total += g.root_count(i) * min(f2.theta, Fraction(1))
        if root.exact_leaf == i:
            total += 1
        if match is not None:
            if match.child is not None:
                rest = self._node_sum(i, match.child)
                return INF if rest == INF else total + rest
            if i in match.leaves:
                k = self.leaves[i].factor
                shifted = root.polys[k].shift(slope, Fraction(1))
                if shifted.delta_Y > 0:
                    return INF
                faces = newton_polygon(shifted, Fraction(1)).faces
                if [S.height for S in faces] != [1]:
                    raise AssertionError("simple root did not produce a single height-1 face")
                total += faces[0].incl
        return total


# -------------------------------------------------------------- construction


def _face_polynomial(w: dict, beta_low: int, nbar: int) -> sympy.Poly:
    coeffs = {}
    for beta, c in w.items():
        k, r = divmod(beta - beta_low, nbar)
        if r:
            raise AssertionError("face exponents are not spaced by the ramification")
        coeffs[k] = c
    return to_sympy(coeffs)


def _irrational(node: Node, theta: Fraction, key, nbar: int) -> IrrationalTrackRoot:
    q = key_to_sympy(key).as_expr().subs(Z, Ysym**nbar)
    _, facs = sympy.factor_list(q, Ysym)
    minpoly = str(facs[0][0].as_expr()).replace("**", "^")
    return IrrationalTrackRoot(node.text, theta, minpoly)


class _Builder:
    def __init__(self) -> None:
        self.leaves: list[Leaf] = []

    def new_leaf(self, factor: int, node: Node, face: FaceData | None, group: Group | None) -> int:
        idx = len(self.leaves)
        if face is None:
            N, steps = node.N, node.steps
        else:
            N = node.N * face.nbar
            steps = node.steps + ((node, face, group),)
        gen = _gen_char(N, steps)
        ord_ = min(N, int(N * steps[0][1].theta)) if steps else 1
        char = gen_char_to_char(GenCharSeq(gen))
        if char.ord != ord_:
            raise AssertionError(f"order {ord_} differs from the characteristic {char}")
        self.leaves.append(Leaf(idx, factor, node, face, group, N, gen, ord_, char))
        return idx

    def expand(self, node: Node) -> None:
        deg = node.deg
        polygons = {k: newton_polygon(P, deg) for k, P in node.polys.items()}
        exact = [k for k, P in node.polys.items() if P.delta_Y > 0]
        dY = sum(node.polys[k].delta_Y for k in exact)
        if dY > 1:
            raise NonReduced(f"track {node.text} is a multiple root")
        thetas = sorted({S.incl for pg in polygons.values() for S in pg.faces})
        total_height = 0
        for theta in thetas:
            face = self.face(node, theta)
            node.faces.append(face)
            total_height += face.height
        if exact:
            node.exact_leaf = self.new_leaf(exact[0], node, None, None)
        if total_height + dY != node.e:
            raise AssertionError(f"track {node.text}: root count {total_height + dY} != {node.e}")

    def face(self, node: Node, theta: Fraction) -> FaceData:
        nbar = (theta * node.N).denominator
        groups: dict[tuple, Group] = {}
        w_joint = sympy.Poly(1, Ysym, domain="QQ")
        beta_low = beta_high = 0
        for k, P in node.polys.items():
            w: dict[int, Fraction] = {}
            for (_a, b), c in P.weighted_initial(theta).items():
                w[b] = w.get(b, 0) + c
            lo, hi = min(w), max(w)
            beta_low += lo
            beta_high += hi
            w_joint = w_joint * to_sympy(w, Ysym)
            if hi == lo:
                continue
            for key, mult in monic_factors(_face_polynomial(w, lo, nbar)):
                g = groups.setdefault(key, Group(key, 0, {}, nbar))
                g.mult += mult
                g.per_factor[k] = mult
        height = beta_high - beta_low
        group_list = [groups[k] for k in sorted(groups)]
        t = squarefree_degree(w_joint)
        eps_Y = 1 if beta_low > 0 else 0
        if t != nbar * sum(g.deg for g in group_list) + eps_Y:
            raise AssertionError("distinct-root count disagrees with the group split")
        eps = -1 if beta_low == 0 else 0
        d = height + eps - t + 1
        if d != sum(nbar * g.deg * (g.mult - 1) for g in group_list):
            raise AssertionError("degeneracy defect disagrees with the group multiplicities")
        positive = [b for (b,) in w_joint.monoms() if b > 0]
        face = FaceData(
            theta, nbar, height, beta_low, beta_high, min(positive), t, d, group_list, eps_Y
        )
        for g in group_list:
            if g.mult == 1:
                (k,) = g.per_factor
                g.leaves = [self.new_leaf(k, node, face, g) for _ in range(g.deg)]
                continue
            if g.deg != 1:
                raise _irrational(node, theta, g.key, nbar)
            a = rational_root(g.z_root, nbar)
            if a is None:
                raise _irrational(node, theta, g.key, nbar)
            child = Node(
                node.phi + ((a, theta),),
                node.N * nbar,
                {k: node.polys[k].shift(a, theta) for k in g.per_factor},
                g.mult,
                node.steps + ((node, face, g),),
            )
            g.child = child
            self.expand(child)
        return face


def _fill_counts(node: Node) -> dict[int, int]:
    counts: dict[int, int] = {}
    for face in node.faces:
        for g in face.groups:
            if g.child is not None:
                for leaf, c in _fill_counts(g.child).items():
                    counts[leaf] = counts.get(leaf, 0) + g.nbar * c
            else:
                for leaf in g.leaves:
                    counts[leaf] = counts.get(leaf, 0) + g.nbar
    if node.exact_leaf is not None:
        counts[node.exact_leaf] = counts.get(node.exact_leaf, 0) + 1
    node.counts = counts
    return counts


def build_newton_tree(factors: Sequence[BiPoly]) -> NewtonTree:
    """Expand the track tree of the product of ``factors``.

    Every factor must vanish at the origin and be coprime to X.
    """
    polys = {}
    e = 0
    for k, F in enumerate(factors):
        p = F.y_order_on_axis()
        if p is None or p == 0:
            raise ValueError(f"factor {F} must vanish at the origin and be coprime to X")
        polys[k] = F.to_track()
        e += p
    root = Node((), 1, polys, e)
    builder = _Builder()
    builder.expand(root)
    _fill_counts(root)
    tree = NewtonTree(root, builder.leaves, list(factors))
    for lf in tree.leaves:
        if root.counts.get(lf.index) != lf.N:
            raise AssertionError(f"leaf {lf.index} has {root.counts.get(lf.index)} roots, expected {lf.N}")
    return tree


__all__ = [
    "FaceData",
    "Group",
    "IrrationalTrackRoot",
    "Leaf",
    "NewtonTree",
    "Node",
    "NonReduced",
    "build_newton_tree",
    "format_track",
]
