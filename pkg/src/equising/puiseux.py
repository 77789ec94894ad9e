"""Explicit Puiseux branches: a brute-force contact oracle and random germs.

Every random germ here comes from actual Puiseux polynomials, so it is
realizable by construction.  Contacts are computed by comparing all
conjugates term by term; a coefficient ``a * zeta^k`` is tracked exactly as
the pair ``(|a|, phase mod 1)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .branch import CharData, SemigroupSeq, char_from_semigroup
from .rational import INF, Ext
from .space import Germ, validate_germ

Term = tuple[Fraction, Fraction]  # (coefficient, exponent)


@dataclass(frozen=True)
class PuiseuxBranch:
    """The branch parametrised by ``Y = sum a_k X^{e_k}`` with rational data."""

    terms: tuple[Term, ...]
    label: str = ""

    def __post_init__(self) -> None:
        terms = tuple((Fraction(a), Fraction(e)) for a, e in self.terms if a != 0)
        if any(terms[k][1] >= terms[k + 1][1] for k in range(len(terms) - 1)):
            raise ValueError("exponents must increase")
        if terms and terms[0][1] <= 0:
            raise ValueError("exponents must be positive")
        object.__setattr__(self, "terms", terms)

    @property
    def N(self) -> int:
        return lcm(1, *(e.denominator for _, e in self.terms))

    @property
    def ord(self) -> int:
        if not self.terms:
            return 1
        return min(self.N, int(self.N * self.terms[0][1]))

    def conjugate(self, k: int) -> tuple[tuple[Fraction, Fraction, Fraction], ...]:
        """Terms of the ``k``-th conjugate as ``(|a|, phase, exponent)``."""
        out = []
        for a, e in self.terms:
            phase = (k * e) % 1
            if a < 0:
                phase = (phase + Fraction(1, 2)) % 1
            out.append((abs(a), phase, e))
        return tuple(out)


def _order_of_difference(u, v) -> Ext:
    du = {e: (a, ph) for a, ph, e in u}
    dv = {e: (a, ph) for a, ph, e in v}
    diff = [e for e in set(du) | set(dv) if du.get(e) != dv.get(e)]
    return min(diff) if diff else INF


def intersection_oracle(y: PuiseuxBranch, z: PuiseuxBranch) -> Ext:
    """``(f, g)_0`` for ``f = [y]``, ``g = [z]`` by summing over all conjugate pairs."""
    z0 = z.conjugate(0)
    total = Fraction(0)
    for k in range(y.N):
        o = _order_of_difference(y.conjugate(k), z0)
        if o == INF:
            return INF
        total += o
    return z.N * total


def contact_oracle(y: PuiseuxBranch, z: PuiseuxBranch) -> Ext:
    m = intersection_oracle(y, z)
    return INF if m == INF else m / (y.ord * z.ord)


def char_oracle(y: PuiseuxBranch) -> CharData:
    """Type of a branch transverse to ``X = 0`` via its value semigroup.

    The characteristic exponents are where the running denominator grows;
    the semigroup generators follow from the classical recursion
    ``g_{k+1} = n_k g_k - b_k + b_{k+1}`` on the exponent numerators.
    """
    if y.terms and y.terms[0][1] < 1:
        raise ValueError("oracle needs a branch transverse to X = 0")
    N = y.N
    numerators = []
    den = 1
    for _, e in y.terms:
        if den % e.denominator:
            numerators.append(int(e * N))
            den = lcm(den, e.denominator)
    if not numerators:
        return CharData.smooth()
    gens = [N, numerators[0]]
    e_prev = gcd(N, numerators[0])
    n_prev = N // e_prev
    for k in range(1, len(numerators)):
        gens.append(n_prev * gens[-1] - numerators[k - 1] + numerators[k])
        e_k = gcd(e_prev, numerators[k])
        n_prev = e_prev // e_k
        e_prev = e_k
    return char_from_semigroup(SemigroupSeq(tuple(gens)))


def germ_from_branches(branches: Sequence[PuiseuxBranch]) -> Germ:
    labels = tuple(b.label or f"f{i + 1}" for i, b in enumerate(branches))
    chars = tuple(char_oracle(b) for b in branches)
    pairs = {}
    for i in range(len(branches)):
        for j in range(i + 1, len(branches)):
            pairs[(i, j)] = contact_oracle(branches[i], branches[j])
    return Germ.from_pairs(labels, chars, pairs)


# ----------------------------------------------------------------- sampling


@dataclass(frozen=True)
class GermBounds:
    max_branches: int = 4
    max_pairs: int = 2
    max_denominator: int = 3
    max_exponent: int = 4
    max_terms: int = 4


def _exponent_grid(bounds: GermBounds) -> list[Fraction]:
    grid = {
        Fraction(m, q)
        for q in range(1, bounds.max_denominator + 1)
        for m in range(q, bounds.max_exponent * q + 1)
    }
    return sorted(grid)


def _coefficient(rng: random.Random) -> Fraction:
    return Fraction(rng.choice([1, -1, 2, -2, 3]), rng.choice([1, 1, 1, 2]))


def _pairs(exps: Sequence[Fraction]) -> int:
    den, count = 1, 0
    for e in exps:
        if den % e.denominator:
            count += 1
            den = lcm(den, e.denominator)
    return count


def _extend(rng: random.Random, prefix: list[Term], start: Fraction, grid, bounds: GermBounds) -> list[Term]:
    terms = list(prefix)
    candidates = [e for e in grid if e >= start]
    budget = rng.randint(0, max(0, bounds.max_terms - len(terms)))
    for _ in range(budget):
        lo = terms[-1][1] if terms else Fraction(0)
        options = [e for e in candidates if e > lo]
        options = [e for e in options if _pairs([t[1] for t in terms] + [e]) <= bounds.max_pairs]
        if not options:
            break
        e = rng.choice(options[: 6])
        terms.append((_coefficient(rng), e))
    return terms


def random_branches(rng: random.Random, bounds: GermBounds = GermBounds()) -> list[PuiseuxBranch]:
    """Random distinct branches transverse to ``X = 0`` sharing random prefixes."""
    grid = _exponent_grid(bounds)
    r = rng.randint(1, bounds.max_branches)
    out: list[PuiseuxBranch] = []
    attempts = 0
    while len(out) < r and attempts < 50 * r:
        attempts += 1
        if out and rng.random() < 0.7:
            parent = list(rng.choice(out).terms)
            cut = rng.randint(0, len(parent))
            prefix = parent[:cut]
            start = parent[cut][1] if cut < len(parent) else (prefix[-1][1] if prefix else Fraction(1))
            terms = _extend(rng, prefix, start, grid, bounds)
            if cut < len(parent) and len(terms) > cut and terms[cut] == parent[cut]:
                continue
        else:
            terms = _extend(rng, [], Fraction(1), grid, bounds)
        cand = PuiseuxBranch(tuple(terms), f"f{len(out) + 1}")
        if any(intersection_oracle(cand, b) == INF for b in out):
            continue
        out.append(cand)
    return out


def random_germ(seed: int, bounds: GermBounds = GermBounds()) -> tuple[Germ, list[PuiseuxBranch]]:
    rng = random.Random(seed)
    branches = random_branches(rng, bounds)
    G = germ_from_branches(branches)
    problems = validate_germ(G)
    if problems:
        raise AssertionError(f"seed {seed}: generated germ is invalid: {problems}")
    return G, branches


def random_line_probe(rng: random.Random, bounds: GermBounds = GermBounds()) -> PuiseuxBranch:
    """Smooth probe ``Y = sum a_k X^k`` with integer exponents."""
    k = rng.randint(0, 3)
    exps = sorted(rng.sample(range(1, bounds.max_exponent + 2), k))
    return PuiseuxBranch(tuple((_coefficient(rng), Fraction(e)) for e in exps), "lambda")


def probe_contacts(probe: PuiseuxBranch, branches: Sequence[PuiseuxBranch]) -> tuple[Ext, ...]:
    return tuple(contact_oracle(probe, b) for b in branches)


__all__ = [
    "GermBounds",
    "PuiseuxBranch",
    "char_oracle",
    "contact_oracle",
    "germ_from_branches",
    "intersection_oracle",
    "probe_contacts",
    "random_branches",
    "random_germ",
    "random_line_probe",
    "branch_polynomial",
]


def branch_polynomial(y: PuiseuxBranch):
    """Minimal polynomial of ``[y]``: the resultant of ``T^N - X`` and ``Y - y(T)``."""
    import sympy

    from .symbolic.germ import _from_sympy
    from .symbolic.intersection import _X, _Y

    T = sympy.Symbol("T")
    N = y.N
    yt = sum(
        (sympy.Rational(a.numerator, a.denominator) * T ** int(e * N) for a, e in y.terms),
        sympy.Integer(0),
    )
    res = sympy.resultant(T**N - _X, _Y - yt, T)
    return _from_sympy(sympy.expand(res))
