"""Eggers collection and tree of a germ, with vertex decorations.

The collection consists of the balls spanned by pairs of branches and by
each branch together with its characteristic contacts.  Ordering these
balls by inclusion gives a rooted tree; each vertex carries its diameter,
characteristic set, multiplicities, order, polar invariant and polar
multiplicity.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .branch import CharData, contact_exponent
from .rational import INF, Ext, fmt, is_inf
from .space import Ball, Cmp, Germ, ball, ball_cmp, ball_members


class NonsingularGerm(ValueError):
    pass


class EmptyBall(ValueError):
    pass


class BallOutsideFamily(ValueError):
    pass


class MalformedTree(ValueError):
    pass


class EmptyEggers(ValueError):
    pass


def _require_center(B: Ball) -> int:
    if not isinstance(B.center, int):
        raise BallOutsideFamily("ball must be centred at a germ branch")
    return B.center


def char_of_ball(B: Ball, G: Germ) -> tuple[Fraction, ...]:
    c = _require_center(B)
    return tuple(d for d in G.chars[c].contacts if d < B.radius)


def nu_n_of_ball(B: Ball, G: Germ) -> tuple[int, int]:
    if is_inf(B.radius):
        raise ValueError("n(B) is defined for finite balls only")
    c = _require_center(B)
    nu = G.chars[c].nu_below(B.radius)
    n = Fraction(B.radius * nu * nu).denominator
    return nu, n


def order_of_ball(B: Ball, G: Germ) -> int:
    return sum(G.ord(k) for k in ball_members(B, G))


def _classes(members: Sequence[int], G: Germ, radius: Ext) -> list[list[int]]:
    """Classes of the relation ``d(f_i, f_j) > radius`` among ``members``."""
    classes: list[list[int]] = []
    for k in members:
        for cls in classes:
            if G.d(cls[0], k) > radius:
                cls.append(k)
                break
        else:
            classes.append([k])
    return classes


def successor_counts(B: Ball, G: Germ) -> tuple[int, int, int]:
    """``(t, t1, t2)``: successor classes and their split by characteristic."""
    members = ball_members(B, G)
    if not members:
        raise EmptyBall("ball contains no branch of the germ")
    if is_inf(B.radius):
        return 0, 0, 0
    classes = _classes(members, G, B.radius)
    t2 = sum(1 for cls in classes if B.radius in G.chars[cls[0]].contacts)
    return len(classes), len(classes) - t2, t2


def tangential_decomposition(G: Germ) -> list[list[int]]:
    return _classes(range(G.r), G, Fraction(1))


def build_collection(G: Germ) -> set[Ball]:
    balls = set()
    for i in range(G.r):
        for j in range(G.r):
            balls.add(ball(G, i, G.d(i, j)))
        for dk in G.chars[i].contacts:
            balls.add(ball(G, i, dk))
    return balls


def _sort_key(B: Ball) -> tuple:
    return (B.radius, B.center)


def q_of_ball(B: Ball, G: Germ, collection: set[Ball] | None = None) -> Fraction:
    """Polar invariant of a ball of the family: chain recursion plus interpolation."""
    if is_inf(B.radius):
        raise BallOutsideFamily("polar invariant of an infinite ball is infinite")
    members = ball_members(B, G)
    if not members:
        raise BallOutsideFamily("ball contains no branch of the germ")
    B = Ball(members[0], B.radius)
    coll = collection if collection is not None else build_collection(G)
    below = sorted(
        (C for C in coll if C.is_finite and ball_cmp(C, B, G) in (Cmp.LESS, Cmp.EQUAL)),
        key=_sort_key,
    )
    ord_f = G.ord_total
    if not below:
        return B.radius * ord_f
    q = below[0].radius * ord_f
    prev = below[0]
    for C in below[1:]:
        q += order_of_ball(C, G) * (C.radius - prev.radius)
        prev = C
    return q + order_of_ball(B, G) * (B.radius - prev.radius)


def m_of_ball(B: Ball, G: Germ) -> int:
    nu, n = nu_n_of_ball(Ball(_require_center(B), B.radius), G)
    _, t1, t2 = successor_counts(B, G)
    return nu * (t1 + n * t2 - 1)


def contact_exponent_of_ball(B: Ball, G: Germ) -> Fraction:
    c = _require_center(B)
    prefix = char_of_ball(B, G)
    ns = G.chars[c].n_seq[: len(prefix)]
    return contact_exponent(prefix, ns, B.radius)


@dataclass(frozen=True)
class VertexData:
    d: Ext
    char_set: tuple[Fraction, ...]
    nu: int
    n: int | None
    order: int
    t: int
    t1: int
    t2: int
    q: Fraction | None
    m: int | None
    members: tuple[int, ...]

    @property
    def is_black(self) -> bool:
        return not is_inf(self.d)


@dataclass(frozen=True)
class Edge:
    parent: Ball
    child: Ball
    solid: bool


@dataclass(frozen=True)
class EggersTree:
    germ: Germ
    vertices: tuple[Ball, ...]
    parent: dict
    children: dict
    data: dict
    root: Ball

    @property
    def edges(self) -> tuple[Edge, ...]:
        out = []
        for B in self.vertices:
            for C in self.children[B]:
                out.append(Edge(B, C, self.is_solid(B, C)))
        return tuple(out)

    def is_solid(self, B: Ball, C: Ball) -> bool:
        return B.radius in self.data[C].char_set

    @property
    def black(self) -> tuple[Ball, ...]:
        """Balls of finite diameter, i.e. the truncated collection."""
        return tuple(B for B in self.vertices if B.is_finite)

    @property
    def white(self) -> tuple[Ball, ...]:
        return tuple(B for B in self.vertices if not B.is_finite)

    def leaf_of(self, i: int) -> Ball:
        return Ball(i, INF)

    def path_to(self, B: Ball) -> list[Ball]:
        path = [B]
        while self.parent[path[-1]] is not None:
            path.append(self.parent[path[-1]])
        return path[::-1]


def build_tree(G: Germ) -> EggersTree:
    coll = build_collection(G)
    ordered = sorted(coll, key=_sort_key)
    parent: dict = {}
    for B in ordered:
        below = [C for C in ordered if ball_cmp(C, B, G) is Cmp.LESS]
        parent[B] = max(below, key=_sort_key) if below else None
    roots = [B for B in ordered if parent[B] is None]
    if len(roots) != 1:
        raise MalformedTree(f"collection has {len(roots)} minimal balls")
    children: dict = {B: [] for B in ordered}
    for B in ordered:
        if parent[B] is not None:
            children[parent[B]].append(B)
    children = {B: tuple(sorted(cs, key=_sort_key)) for B, cs in children.items()}

    data = {}
    for B in ordered:
        members = tuple(ball_members(B, G))
        cs = char_of_ball(B, G)
        order = sum(G.ord(k) for k in members)
        if B.is_finite:
            nu, n = nu_n_of_ball(B, G)
            t, t1, t2 = successor_counts(B, G)
            q = q_of_ball(B, G, coll)
            m = nu * (t1 + n * t2 - 1)
        else:
            nu, n = G.chars[B.center].nu_seq[-1], None
            t = t1 = t2 = 0
            q = m = None
        data[B] = VertexData(B.radius, cs, nu, n, order, t, t1, t2, q, m, members)

    tree = EggersTree(G, tuple(_bfs(roots[0], children)), parent, children, data, roots[0])
    _check_tree(tree)
    return tree


def _bfs(root: Ball, children: dict) -> list[Ball]:
    out, queue = [], [root]
    while queue:
        B = queue.pop(0)
        out.append(B)
        queue.extend(children[B])
    return out


def _check_tree(T: EggersTree) -> None:
    """Redundant consistency checks between the decorations and the edges."""
    G = T.germ
    whites = sorted(B.center for B in T.white)
    if whites != list(range(G.r)):
        raise MalformedTree("white vertices are not exactly the branches")
    for B in T.black:
        v = T.data[B]
        kids = T.children[B]
        t2_edges = sum(1 for C in kids if T.is_solid(B, C))
        if (v.t, v.t2) != (len(kids), t2_edges):
            raise MalformedTree(f"successor counts of {fmt(B.radius)} disagree with edges")
        if v.n > 1 and v.t1 > 1:
            raise MalformedTree(f"characteristic ball {fmt(B.radius)} has t1 = {v.t1}")
        if v.m <= 0:
            raise MalformedTree(f"ball {fmt(B.radius)} of the collection has m = {v.m}")
        if any(c >= v.d for c in v.char_set):
            raise MalformedTree("characteristic set not below the diameter")


def polar_invariants(G: Germ, tree: EggersTree | None = None) -> dict[Fraction, int]:
    """Polar invariants with multiplicities, keyed by value."""
    if not G.is_singular:
        raise NonsingularGerm("a smooth branch has no polar invariants")
    T = tree or build_tree(G)
    out: Counter = Counter()
    for B in T.black:
        out[T.data[B].q] += T.data[B].m
    return dict(sorted(out.items()))


def max_polar_invariant(G: Germ, tree: EggersTree | None = None) -> Fraction:
    return max(polar_invariants(G, tree))


def lojasiewicz(G: Germ, tree: EggersTree | None = None) -> Fraction:
    if not G.is_singular:
        return Fraction(0)
    return max_polar_invariant(G, tree) - 1


def lojasiewicz_via_tangential(G: Germ) -> Fraction:
    """Exponent assembled from the tangential components of the germ."""
    if not G.is_singular:
        return Fraction(0)
    comps = tangential_decomposition(G)
    if len(comps) == 1:
        return lojasiewicz(G)
    ord_f = G.ord_total
    best = None
    for comp in comps:
        sub = G.subgerm(comp)
        value = lojasiewicz_via_tangential(sub) + ord_f - sub.ord_total
        best = value if best is None else max(best, value)
    return best


def germ_from_tree(T: EggersTree) -> Germ:
    """Rebuild the germ from the tree shape, diameters, labels and edge styles."""
    labels_by_leaf = {}
    for B in T.white:
        labels_by_leaf[B] = T.germ.labels[B.center]
    leaves = sorted(labels_by_leaf, key=lambda B: B.center)
    paths = {}
    chars = []
    for leaf in leaves:
        path = T.path_to(leaf)
        if T.root != path[0]:
            raise MalformedTree("path does not start at the root")
        contacts = []
        for B, C in zip(path, path[1:]):
            if T.is_solid(B, C):
                contacts.append(B.radius)
        contacts = tuple(contacts)
        chars.append(CharData(CharData(1, contacts).nu_seq[-1], contacts))
        paths[leaf] = path
    r = len(leaves)
    matrix = [[INF] * r for _ in range(r)]
    for a in range(r):
        for b in range(a + 1, r):
            pa, pb = paths[leaves[a]], paths[leaves[b]]
            common = [B for B, C in zip(pa, pb) if B == C]
            if not common:
                raise MalformedTree("leaves share no ancestor")
            matrix[a][b] = matrix[b][a] = common[-1].radius
    return Germ(
        tuple(labels_by_leaf[B] for B in leaves),
        tuple(chars),
        tuple(tuple(row) for row in matrix),
    )


def germs_isomorphic(G1: Germ, G2: Germ) -> bool:
    """Same branch types and contacts up to a relabelling of branches."""
    if G1.r != G2.r or Counter(G1.chars) != Counter(G2.chars):
        return False
    r = G1.r
    assignment: list[int] = []
    used = [False] * r

    def extend(i: int) -> bool:
        if i == r:
            return True
        for j in range(r):
            if used[j] or G1.chars[i] != G2.chars[j]:
                continue
            if all(G1.d(i, k) == G2.d(j, assignment[k]) for k in range(i)):
                used[j] = True
                assignment.append(j)
                if extend(i + 1):
                    return True
                assignment.pop()
                used[j] = False
        return False

    return extend(0)


def to_dot(T: EggersTree) -> str:
    """Deterministic Graphviz text for the tree."""
    ids = {B: f"v{k}" for k, B in enumerate(T.vertices)}
    lines = ["digraph eggers {", "  node [shape=circle];"]
    for B in T.vertices:
        if B.is_finite:
            lines.append(
                f'  {ids[B]} [label="{fmt(B.radius)}", style=filled, fillcolor=black, fontcolor=white];'
            )
        else:
            label = T.germ.labels[B.center].replace('"', '\\"')
            lines.append(f'  {ids[B]} [label="{label}", style=filled, fillcolor=white];')
    for e in T.edges:
        style = "solid" if e.solid else "dashed"
        lines.append(f"  {ids[e.parent]} -> {ids[e.child]} [style={style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


__all__ = [
    "BallOutsideFamily",
    "Edge",
    "EggersTree",
    "EmptyBall",
    "EmptyEggers",
    "MalformedTree",
    "NonsingularGerm",
    "VertexData",
    "build_collection",
    "build_tree",
    "char_of_ball",
    "contact_exponent_of_ball",
    "germ_from_tree",
    "germs_isomorphic",
    "lojasiewicz",
    "lojasiewicz_via_tangential",
    "m_of_ball",
    "max_polar_invariant",
    "nu_n_of_ball",
    "order_of_ball",
    "polar_invariants",
    "q_of_ball",
    "successor_counts",
    "tangential_decomposition",
    "to_dot",
]
