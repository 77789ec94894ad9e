"""Equisingularity type of a single branch.

A branch is encoded canonically by its order and its strictly increasing
characteristic contacts.  This module converts between that encoding, the
minimal semigroup generators, and the generalized characteristic sequence
of a Puiseux root, and it exposes the supporting-line geometry of the
characteristic Newton diagram.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .rational import INF, Ext, is_inf


class InvalidSemigroup(ValueError):
    pass


class InvalidCharData(ValueError):
    pass


class InvalidGenChar(ValueError):
    pass


class PrefixNotBelowDiameter(ValueError):
    pass


class UnsupportedLine(ValueError):
    """No supporting line of the requested inclination or intercept exists."""


def _gcd_all(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g


def n_from_contacts(contacts: Sequence[Fraction]) -> tuple[int, ...]:
    """Recover the multiplicity jumps ``n_k`` from the contacts alone.

    ``n_k`` is the least ``n`` with ``d_k * nu_{k-1}^2 * n`` integral, where
    ``nu_{k-1}`` is the product of the earlier jumps.
    """
    ns: list[int] = []
    nu = 1
    for d in contacts:
        n = Fraction(d * nu * nu).denominator
        ns.append(n)
        nu *= n
    return tuple(ns)


@dataclass(frozen=True)
class SemigroupSeq:
    """Minimal generators of the value semigroup of a branch."""

    betas: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "betas", tuple(int(b) for b in self.betas))

    def violations(self) -> list[str]:
        b = self.betas
        out: list[str] = []
        if not b:
            return ["empty generator sequence"]
        if any(x <= 0 for x in b):
            out.append("generators must be positive")
        if any(b[i] >= b[i + 1] for i in range(len(b) - 1)):
            out.append("generators must be strictly increasing")
        if _gcd_all(b) != 1:
            out.append("generators must be coprime")
        if len(b) == 1 and b[0] != 1:
            out.append("a single generator must equal 1 (smooth branch)")
        if len(b) > 1 and b[0] < 2:
            out.append("a singular branch needs multiplicity >= 2")
        if out:
            return out
        e_prev = b[0]
        for k in range(1, len(b)):
            e_k = gcd(e_prev, b[k])
            if e_k == e_prev:
                out.append(f"generator {b[k]} does not lower the gcd")
                break
            if k + 1 < len(b) and (e_prev // e_k) * b[k] >= b[k + 1]:
                out.append(f"n_{k}*beta_{k} >= beta_{k + 1} breaks minimality")
                break
            e_prev = e_k
        return out

    @property
    def is_valid(self) -> bool:
        return not self.violations()


@dataclass(frozen=True)
class CharData:
    """Order and characteristic contacts of a branch.

    ``n_seq`` defaults to the jumps recovered from the contacts; passing an
    explicit value lets :func:`validate_char` catch inconsistent input.
    """

    ord: int
    contacts: tuple[Fraction, ...] = ()
    n_seq: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "contacts", tuple(Fraction(c) for c in self.contacts))
        if self.n_seq is None:
            object.__setattr__(self, "n_seq", n_from_contacts(self.contacts))
        else:
            object.__setattr__(self, "n_seq", tuple(int(n) for n in self.n_seq))

    @classmethod
    def smooth(cls) -> "CharData":
        return cls(1, ())

    @property
    def g(self) -> int:
        return len(self.contacts)

    @property
    def is_smooth(self) -> bool:
        return self.g == 0

    @property
    def nu_seq(self) -> tuple[int, ...]:
        nus = [1]
        for n in self.n_seq:
            nus.append(nus[-1] * n)
        return tuple(nus)

    def nu_below(self, radius: Ext) -> int:
        """Product of the jumps attached to contacts strictly below ``radius``."""
        nu = 1
        for d, n in zip(self.contacts, self.n_seq):
            if d < radius:
                nu *= n
        return nu


def _char_violations(c: CharData) -> list[str]:
    out: list[str] = []
    if c.ord < 1:
        out.append("order must be positive")
    cs = c.contacts
    if any(cs[i] >= cs[i + 1] for i in range(len(cs) - 1)):
        out.append("contacts must be strictly increasing")
    if cs and cs[0] <= 1:
        out.append("contacts must exceed 1")
    if len(c.n_seq) != len(cs):
        out.append("n_seq length differs from contacts")
        return out
    recomputed = n_from_contacts(cs)
    if tuple(c.n_seq) != recomputed:
        out.append(f"n_seq {c.n_seq} differs from the reconstruction {recomputed}")
    for k, n in enumerate(recomputed, start=1):
        if n < 2:
            out.append(f"contact d_{k} = {cs[k - 1]} lies in the excluded lattice")
    nu = 1
    for n in recomputed:
        nu *= n
    if nu != c.ord:
        out.append(f"product of jumps {nu} differs from order {c.ord}")
    return out


def validate_char(c: CharData) -> bool:
    return not _char_violations(c)


def char_from_semigroup(s: SemigroupSeq) -> CharData:
    problems = s.violations()
    if problems:
        raise InvalidSemigroup("; ".join(problems))
    b = s.betas
    b0 = b[0]
    contacts = []
    ns = []
    e_prev = b0
    for k in range(1, len(b)):
        contacts.append(Fraction(e_prev * b[k], b0 * b0))
        e_k = gcd(e_prev, b[k])
        ns.append(e_prev // e_k)
        e_prev = e_k
    return CharData(b0, tuple(contacts), tuple(ns))


def semigroup_from_char(c: CharData) -> SemigroupSeq:
    problems = _char_violations(c)
    if problems:
        raise InvalidCharData("; ".join(problems))
    betas = [c.ord]
    for d, nu_prev in zip(c.contacts, c.nu_seq):
        beta = d * c.ord * nu_prev
        if beta.denominator != 1:
            raise InvalidCharData(f"generator {beta} is not an integer")
        betas.append(int(beta))
    s = SemigroupSeq(tuple(betas))
    if not s.is_valid:
        raise InvalidCharData("; ".join(s.violations()))
    if char_from_semigroup(s) != c:
        raise InvalidCharData("contacts do not round-trip through the semigroup")
    return s


def contact_exponent(
    char_prefix: Sequence[Fraction], n_prefix: Sequence[int], d: Fraction
) -> Fraction:
    """Eggers' contact exponent of a ball of diameter ``d``."""
    if len(char_prefix) != len(n_prefix):
        raise ValueError("prefix lengths differ")
    if any(char_prefix[i] >= char_prefix[i + 1] for i in range(len(char_prefix) - 1)):
        raise ValueError("prefix must be strictly increasing")
    if char_prefix and char_prefix[-1] >= d:
        raise PrefixNotBelowDiameter(f"{char_prefix[-1]} is not below {d}")
    points = list(char_prefix) + [Fraction(d)]
    total = points[0]
    weight = 1
    for k in range(1, len(points)):
        weight *= n_prefix[k - 1]
        total += weight * (points[k] - points[k - 1])
    return total


@dataclass(frozen=True)
class GenCharSeq:
    """Puiseux denominator followed by the characteristic exponent numerators."""

    b: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))

    def violations(self) -> list[str]:
        b = self.b
        if not b or b[0] < 1:
            return ["b_0 must be a positive integer"]
        if any(x < 1 for x in b[1:]):
            return ["exponents must be positive"]
        out = []
        if any(b[i] >= b[i + 1] for i in range(1, len(b) - 1)):
            out.append("characteristic exponents must increase")
        e_prev = b[0]
        for x in b[1:]:
            e = gcd(e_prev, x)
            if e == e_prev:
                out.append(f"exponent {x} does not lower the gcd")
                break
            e_prev = e
        if e_prev != 1:
            out.append("sequence is not coprime")
        return out

    @property
    def h(self) -> int:
        return len(self.b) - 1

    @property
    def ord(self) -> int:
        return min(self.b[0], self.b[1]) if self.h else self.b[0]

    @property
    def d_axis(self) -> Fraction:
        """Contact of the branch with the line X = 0."""
        return Fraction(self.b[0], self.ord)


@dataclass(frozen=True)
class CharDiagram:
    """Scaled characteristic Newton diagram.

    ``vertices`` run from the vertical-axis vertex down to the lowest vertex;
    the region also contains the vertical ray above the first vertex and the
    horizontal ray to the right of the last one.
    """

    vertices: tuple[tuple[Fraction, Fraction], ...]
    inclinations: tuple[Fraction, ...]
    intercepts: tuple[Fraction, ...]
    ord: int

    @property
    def d_axis(self) -> Fraction:
        return self.vertices[0][1]


def char_diagram(g: GenCharSeq) -> CharDiagram:
    problems = g.violations()
    if problems:
        raise InvalidGenChar("; ".join(problems))
    b = g.b
    b0 = b[0]
    scale = Fraction(1, g.ord)
    x, y = Fraction(0), Fraction(b0)
    vertices = [(x * scale, y * scale)]
    incls, alphas = [], []
    e_prev = b0
    for bk in b[1:]:
        e_k = gcd(e_prev, bk)
        height = e_prev - e_k
        incl = Fraction(bk, b0)
        alphas.append((x + incl * y) * scale)
        x += incl * height
        y -= height
        vertices.append((x * scale, y * scale))
        incls.append(incl)
        e_prev = e_k
    return CharDiagram(tuple(vertices), tuple(incls), tuple(alphas), g.ord)


def alpha_of_kappa(D: CharDiagram, kappa: Ext) -> Fraction:
    """Abscissa where the supporting line of inclination ``kappa`` meets Y = 0."""
    if is_inf(kappa) or kappa <= 0:
        raise UnsupportedLine(f"no supporting line of inclination {kappa}")
    kappa = Fraction(kappa)
    return min(x + kappa * y for x, y in D.vertices)


def kappa_of_alpha(D: CharDiagram, alpha: Ext) -> Fraction:
    """Inverse of :func:`alpha_of_kappa` on positive intercepts."""
    if is_inf(alpha) or alpha <= 0:
        raise UnsupportedLine(f"no supporting line with intercept {alpha}")
    alpha = Fraction(alpha)
    return max((alpha - x) / y for x, y in D.vertices)


def gen_char_to_char(g: GenCharSeq) -> CharData:
    """Characteristic contacts from a generalized characteristic sequence."""
    D = char_diagram(g)
    d = D.d_axis
    alphas = D.intercepts
    if d == 1:
        contacts = alphas
    elif d.denominator != 1:
        contacts = tuple(d * a for a in alphas)
    else:
        contacts = tuple(d * a for a in alphas[1:])
    c = CharData(D.ord, tuple(contacts))
    problems = _char_violations(c)
    if problems:
        raise InvalidGenChar("; ".join(problems))
    if d * c.nu_seq[-1] != g.b[0]:
        raise InvalidGenChar("Puiseux denominator differs from d(f,X) * ord")
    return c


def char_from_betas(*betas: int) -> CharData:
    """Shorthand for ``char_from_semigroup(SemigroupSeq(betas))``."""
    return char_from_semigroup(SemigroupSeq(tuple(betas)))


__all__ = [
    "INF",
    "CharData",
    "CharDiagram",
    "GenCharSeq",
    "InvalidCharData",
    "InvalidGenChar",
    "InvalidSemigroup",
    "PrefixNotBelowDiameter",
    "SemigroupSeq",
    "UnsupportedLine",
    "alpha_of_kappa",
    "char_diagram",
    "char_from_betas",
    "char_from_semigroup",
    "contact_exponent",
    "gen_char_to_char",
    "kappa_of_alpha",
    "n_from_contacts",
    "semigroup_from_char",
    "validate_char",
]
