"""Germ documents in, analysis reports out.

A germ document names one germ, either as a polynomial or abstractly by
branch semigroups and pairwise contacts, plus optional regular parameters.
A report collects the tree, the invariants and one polar section per
parameter.  Every rational is written as an exact ``"p/q"`` string.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping, Sequence

from .branch import CharData, SemigroupSeq, char_from_semigroup, semigroup_from_char
from .eggers import EggersTree, build_tree, lojasiewicz, polar_invariants
from .polar import (
    PolarReport,
    branch_parameter,
    polar_report,
    regular_parameter,
    special_verdict,
    transversal_parameter,
)
from .rational import Ext, fmt, is_inf, parse_rational
from .space import ExternalBranch, Germ, InvalidContacts, validate_germ

SCHEMA_VERSION = 1


class DocumentError(ValueError):
    """The document is not well-formed JSON or does not follow the schema."""


def _q(x: Ext | None) -> str | None:
    return None if x is None else fmt(x)


def _rat(text: str | None) -> Ext | None:
    if text is None:
        return None
    if not isinstance(text, str):
        raise DocumentError(f"rationals must be strings, got {text!r}")
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


# ------------------------------------------------------------- germ documents


@dataclass(frozen=True)
class LambdaSpec:
    """A regular parameter as written in a document or on the command line.

    ``kind`` is one of ``transversal``, ``branch``, ``contacts``, ``X``, ``Y``
    or ``linear``; the last three need a polynomial germ.
    """

    label: str
    kind: str
    branch: str | None = None
    contacts: tuple[tuple[str, Ext], ...] = ()
    linear: tuple[Fraction, Fraction] | None = None

    @classmethod
    def parse(cls, text: str) -> "LambdaSpec":
        """Command-line form: ``transversal``, ``X``, ``Y``, ``linear:a,b`` or a branch label."""
        s = text.strip()
        if s == "transversal":
            return cls("transversal", "transversal")
        if s in ("X", "Y"):
            return cls(s, s)
        if s.startswith("linear:"):
            parts = s[len("linear:"):].split(",")
            if len(parts) != 2:
                raise DocumentError(f"linear parameter needs two coefficients: {text!r}")
            try:
                a, b = (Fraction(p.strip()) for p in parts)
            except ValueError:
                raise DocumentError(f"bad linear coefficients in {text!r}") from None
            if a == 0 and b == 0:
                raise DocumentError("linear parameter 0*X + 0*Y is not regular")
            return cls(s, "linear", linear=(a, b))
        if s.startswith("branch:"):
            s = s[len("branch:"):].strip()
        if not s:
            raise DocumentError("empty parameter specification")
        return cls(s, "branch", branch=s)

    @classmethod
    def from_json(cls, obj: Any) -> "LambdaSpec":
        if isinstance(obj, str):
            return cls.parse(obj)
        if not isinstance(obj, Mapping):
            raise DocumentError(f"bad parameter entry {obj!r}")
        label = str(obj.get("label", "lambda"))
        if obj.get("transversal"):
            return cls(label, "transversal")
        if "branch" in obj:
            return cls(label, "branch", branch=str(obj["branch"]))
        if "linear" in obj:
            spec = cls.parse("linear:" + ",".join(str(v) for v in obj["linear"]))
            return cls(label, "linear", linear=spec.linear)
        if "contacts" in obj:
            raw = obj["contacts"]
            items = raw.items() if isinstance(raw, Mapping) else [(e["branch"], e["value"]) for e in raw]
            return cls(label, "contacts", contacts=tuple((str(k), _rat(str(v))) for k, v in items))
        raise DocumentError(f"parameter {label!r} has no contacts, branch or transversal flag")

    def to_json(self) -> dict:
        out: dict[str, Any] = {"label": self.label}
        if self.kind == "transversal":
            out["transversal"] = True
        elif self.kind == "branch":
            out["branch"] = self.branch
        elif self.kind == "contacts":
            out["contacts"] = {k: fmt(v) for k, v in self.contacts}
        elif self.kind == "linear":
            out["linear"] = [fmt(c) for c in self.linear]
        else:
            out["axis"] = self.kind
        return out


@dataclass(frozen=True)
class GermDocument:
    poly: str | None = None
    germ: Germ | None = None
    lambdas: tuple[LambdaSpec, ...] = ()

    @classmethod
    def loads(cls, text: str) -> "GermDocument":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON: {exc}") from None
        return cls.from_json(obj)

    @classmethod
    def from_json(cls, obj: Any) -> "GermDocument":
        if not isinstance(obj, Mapping):
            raise DocumentError("a germ document is a JSON object")
        poly = obj.get("poly")
        if poly is not None and not isinstance(poly, str):
            raise DocumentError("poly must be a string")
        germ = _abstract_germ(obj["abstract"]) if "abstract" in obj else None
        if poly is None and germ is None:
            raise DocumentError("document needs 'poly' or 'abstract'")
        lambdas = tuple(LambdaSpec.from_json(e) for e in obj.get("lambdas", []))
        return cls(poly, germ, lambdas)

    def to_json(self) -> dict:
        out: dict[str, Any] = {}
        if self.poly is not None:
            out["poly"] = self.poly
        if self.germ is not None:
            out["abstract"] = abstract_json(self.germ)
        if self.lambdas:
            out["lambdas"] = [s.to_json() for s in self.lambdas]
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"


def _branch_char(entry: Mapping) -> CharData:
    if entry.get("smooth"):
        return CharData.smooth()
    if "semigroup" not in entry:
        raise DocumentError(f"branch {entry.get('label')!r} needs 'semigroup' or 'smooth'")
    gens = entry["semigroup"]
    if not isinstance(gens, list) or not all(isinstance(g, int) for g in gens):
        raise DocumentError("semigroup must be a list of integers")
    if gens == [1]:
        return CharData.smooth()
    return char_from_semigroup(SemigroupSeq(tuple(gens)))


def _abstract_germ(obj: Any) -> Germ:
    try:
        branches = obj["branches"]
        labels = [str(b["label"]) for b in branches]
        chars = [_branch_char(b) for b in branches]
        index = {lb: k for k, lb in enumerate(labels)}
        pairs: dict[tuple[int, int], Ext] = {}
        for entry in obj.get("contacts", []):
            a, b = entry["pair"]
            i, j = index[a], index[b]
            pairs[(min(i, j), max(i, j))] = _rat(entry["value"])
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"malformed abstract germ: {exc!r}") from None
    return Germ.from_pairs(labels, chars, pairs)


def _semigroup(c: CharData) -> list[int]:
    return [1] if c.is_smooth else list(semigroup_from_char(c).betas)


def abstract_json(G: Germ) -> dict:
    branches = []
    for lb, c in zip(G.labels, G.chars):
        branches.append({"label": lb, "smooth": True} if c.is_smooth else {"label": lb, "semigroup": _semigroup(c)})
    contacts = [
        {"pair": [G.labels[i], G.labels[j]], "value": fmt(G.d(i, j))}
        for i in range(G.r)
        for j in range(i + 1, G.r)
    ]
    return {"branches": branches, "contacts": contacts}


def resolve_lambda(G: Germ, spec: LambdaSpec) -> ExternalBranch:
    """Abstract resolution; axis and linear parameters are resolved by the caller."""
    if spec.kind == "transversal":
        return transversal_parameter(G, spec.label)
    if spec.kind == "branch":
        return branch_parameter(G, G.index(spec.branch), spec.label)
    if spec.kind == "contacts":
        given = dict(spec.contacts)
        unknown = set(given) - set(G.labels)
        if unknown:
            raise InvalidContacts(f"parameter {spec.label} names unknown branches {sorted(unknown)}")
        missing = [lb for lb in G.labels if lb not in given]
        if missing:
            raise InvalidContacts(f"parameter {spec.label} lacks contacts with {missing}")
        return regular_parameter(G, [given[lb] for lb in G.labels], spec.label)
    raise InvalidContacts(f"parameter {spec.label!r} needs a polynomial germ")


# -------------------------------------------------------------------- reports


@dataclass(frozen=True)
class BranchInfo:
    label: str
    ord: int
    char: tuple[Fraction, ...]
    semigroup: tuple[int, ...]


@dataclass(frozen=True)
class VertexInfo:
    id: str
    center: str
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
    members: tuple[str, ...]

    @property
    def black(self) -> bool:
        return not is_inf(self.d)


@dataclass(frozen=True)
class EdgeInfo:
    parent: str
    child: str
    solid: bool


@dataclass(frozen=True)
class ComponentInfo:
    branches: tuple[str, ...]
    M: Fraction


@dataclass(frozen=True)
class BallInfo:
    center: str
    radius: Ext
    q: Fraction
    d_lambda: Ext
    m: int


@dataclass(frozen=True)
class PolarExponentInfo:
    class_dependent: bool
    upper: Fraction
    lower: Fraction

    def to_json(self) -> dict:
        if self.class_dependent:
            return {"class_dependent": True, "upper": fmt(self.upper), "lower": fmt(self.lower)}
        return {"class_dependent": False, "value": fmt(self.upper)}

    @classmethod
    def from_json(cls, obj: Mapping) -> "PolarExponentInfo":
        if obj["class_dependent"]:
            return cls(True, _rat(obj["upper"]), _rat(obj["lower"]))
        v = _rat(obj["value"])
        return cls(False, v, v)


@dataclass(frozen=True)
class LambdaInfo:
    label: str
    contacts: tuple[Ext, ...]
    delta: int
    transversal: bool
    balls: tuple[BallInfo, ...]
    quotients: tuple[tuple[Fraction, int], ...]
    q0: Ext
    tilde_L: Fraction
    L_on_polar: PolarExponentInfo
    is_special: bool
    left_strict: bool
    right_strict: bool


@dataclass(frozen=True)
class CheckInfo:
    name: str
    passed: bool
    expected: str
    actual: str


@dataclass(frozen=True)
class VerifyInfo:
    passed: bool
    lam: str
    coordinate_change: tuple[Fraction, ...] | None
    delta_X: int
    bound_only: int
    checks: tuple[CheckInfo, ...]
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class LedgerInfo:
    """Derivative-root counts per track and face; ``partial`` when only the first step ran."""

    partial: bool
    p: int
    total: int
    entries: tuple[tuple[str, Fraction, int, str], ...]  # (track, inclination, count, case)


@dataclass(frozen=True)
class Report:
    poly: str | None
    branches: tuple[BranchInfo, ...]
    contacts: tuple[tuple[str, str, Ext], ...]
    vertices: tuple[VertexInfo, ...] = ()
    edges: tuple[EdgeInfo, ...] = ()
    root: str | None = None
    polar_invariants: tuple[tuple[Fraction, int], ...] = ()
    L0: Fraction | None = None
    components: tuple[ComponentInfo, ...] = ()
    special_direction: str | None = None
    lambdas: tuple[LambdaInfo, ...] = ()
    verify: VerifyInfo | None = None
    ledger: LedgerInfo | None = None
    notes: tuple[str, ...] = ()
    error: str | None = None
    schema_version: int = SCHEMA_VERSION

    # ----------------------------------------------------------- serialization

    def to_json(self) -> dict:
        out: dict[str, Any] = {"schema_version": self.schema_version}
        germ: dict[str, Any] = {
            "branches": [
                {
                    "label": b.label,
                    "ord": b.ord,
                    "char": [fmt(c) for c in b.char],
                    "semigroup": list(b.semigroup),
                }
                for b in self.branches
            ],
            "contacts": [{"pair": [a, b], "value": fmt(v)} for a, b, v in self.contacts],
        }
        if self.poly is not None:
            germ["poly"] = self.poly
        out["germ"] = germ
        out["tree"] = {
            "root": self.root,
            "vertices": [
                {
                    "id": v.id,
                    "center": v.center,
                    "black": v.black,
                    "d": fmt(v.d),
                    "char_set": [fmt(c) for c in v.char_set],
                    "nu": v.nu,
                    "n": v.n,
                    "order": v.order,
                    "t": v.t,
                    "t1": v.t1,
                    "t2": v.t2,
                    "q": _q(v.q),
                    "m": v.m,
                    "members": list(v.members),
                }
                for v in self.vertices
            ],
            "edges": [
                {"parent": e.parent, "child": e.child, "style": "solid" if e.solid else "discontinuous"}
                for e in self.edges
            ],
        }
        out["polar_invariants"] = [{"value": fmt(v), "multiplicity": m} for v, m in self.polar_invariants]
        out["L0"] = _q(self.L0)
        out["components"] = [{"branches": list(c.branches), "M": fmt(c.M)} for c in self.components]
        out["special_direction"] = self.special_direction
        out["lambdas"] = [_lambda_json(lam) for lam in self.lambdas]
        if self.verify is not None:
            out["verify"] = verify_json(self.verify)
        if self.ledger is not None:
            out["ledger"] = {
                "partial": self.ledger.partial,
                "p": self.ledger.p,
                "total": self.ledger.total,
                "entries": [
                    {"track": t, "inclination": fmt(theta), "count": c, "case": case}
                    for t, theta, c, case in self.ledger.entries
                ],
            }
        if self.notes:
            out["notes"] = list(self.notes)
        if self.error is not None:
            out["error"] = self.error
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def loads(cls, text: str) -> "Report":
        return cls.from_json(json.loads(text))

    @classmethod
    def from_json(cls, obj: Mapping) -> "Report":
        version = obj.get("schema_version")
        if version != SCHEMA_VERSION:
            raise DocumentError(f"unsupported schema version {version!r}")
        germ = obj["germ"]
        tree = obj["tree"]
        ledger = obj.get("ledger")
        return cls(
            poly=germ.get("poly"),
            branches=tuple(
                BranchInfo(b["label"], b["ord"], tuple(_rat(c) for c in b["char"]), tuple(b["semigroup"]))
                for b in germ["branches"]
            ),
            contacts=tuple((c["pair"][0], c["pair"][1], _rat(c["value"])) for c in germ["contacts"]),
            vertices=tuple(
                VertexInfo(
                    v["id"],
                    v["center"],
                    _rat(v["d"]),
                    tuple(_rat(c) for c in v["char_set"]),
                    v["nu"],
                    v["n"],
                    v["order"],
                    v["t"],
                    v["t1"],
                    v["t2"],
                    _rat(v["q"]),
                    v["m"],
                    tuple(v["members"]),
                )
                for v in tree["vertices"]
            ),
            edges=tuple(EdgeInfo(e["parent"], e["child"], e["style"] == "solid") for e in tree["edges"]),
            root=tree["root"],
            polar_invariants=tuple((_rat(e["value"]), e["multiplicity"]) for e in obj["polar_invariants"]),
            L0=_rat(obj["L0"]),
            components=tuple(ComponentInfo(tuple(c["branches"]), _rat(c["M"])) for c in obj["components"]),
            special_direction=obj["special_direction"],
            lambdas=tuple(_lambda_from_json(e) for e in obj["lambdas"]),
            verify=_verify_from_json(obj["verify"]) if "verify" in obj else None,
            ledger=None
            if ledger is None
            else LedgerInfo(
                ledger["partial"],
                ledger["p"],
                ledger["total"],
                tuple((e["track"], _rat(e["inclination"]), e["count"], e["case"]) for e in ledger["entries"]),
            ),
            notes=tuple(obj.get("notes", ())),
            error=obj.get("error"),
            schema_version=version,
        )

    # -------------------------------------------------------------- lookups

    def vertex(self, vid: str) -> VertexInfo:
        return next(v for v in self.vertices if v.id == vid)

    def lam(self, label: str) -> LambdaInfo:
        return next(lam for lam in self.lambdas if lam.label == label)


def _lambda_json(lam: LambdaInfo) -> dict:
    return {
        "label": lam.label,
        "contacts": [fmt(v) for v in lam.contacts],
        "delta": lam.delta,
        "transversal": lam.transversal,
        "balls": [
            {"center": b.center, "radius": fmt(b.radius), "q": fmt(b.q), "d_lambda": fmt(b.d_lambda), "m": b.m}
            for b in lam.balls
        ],
        "quotients": [{"value": fmt(v), "multiplicity": m} for v, m in lam.quotients],
        "q0": fmt(lam.q0),
        "tilde_L": fmt(lam.tilde_L),
        "L_on_polar": lam.L_on_polar.to_json(),
        "is_special": lam.is_special,
        "left_strict": lam.left_strict,
        "right_strict": lam.right_strict,
    }


def _lambda_from_json(e: Mapping) -> LambdaInfo:
    return LambdaInfo(
        e["label"],
        tuple(_rat(v) for v in e["contacts"]),
        e["delta"],
        e["transversal"],
        tuple(BallInfo(b["center"], _rat(b["radius"]), _rat(b["q"]), _rat(b["d_lambda"]), b["m"]) for b in e["balls"]),
        tuple((_rat(q["value"]), q["multiplicity"]) for q in e["quotients"]),
        _rat(e["q0"]),
        _rat(e["tilde_L"]),
        PolarExponentInfo.from_json(e["L_on_polar"]),
        e["is_special"],
        e["left_strict"],
        e["right_strict"],
    )


def verify_json(v: VerifyInfo) -> dict:
    return {
        "passed": v.passed,
        "lambda": v.lam,
        "coordinate_change": None if v.coordinate_change is None else [fmt(c) for c in v.coordinate_change],
        "delta_X": v.delta_X,
        "bound_only": v.bound_only,
        "checks": [
            {"name": c.name, "passed": c.passed, "expected": c.expected, "actual": c.actual} for c in v.checks
        ],
        "notes": list(v.notes),
    }


def _verify_from_json(v: Mapping) -> VerifyInfo:
    change = v["coordinate_change"]
    return VerifyInfo(
        v["passed"],
        v["lambda"],
        None if change is None else tuple(_rat(c) for c in change),
        v["delta_X"],
        v["bound_only"],
        tuple(CheckInfo(c["name"], c["passed"], c["expected"], c["actual"]) for c in v["checks"]),
        tuple(v.get("notes", ())),
    )


# ----------------------------------------------------------------- building


def _vertex_infos(T: EggersTree) -> tuple[tuple[VertexInfo, ...], tuple[EdgeInfo, ...], dict]:
    G = T.germ
    ids = {B: f"v{k}" for k, B in enumerate(T.vertices)}
    vertices = []
    for B in T.vertices:
        v = T.data[B]
        vertices.append(
            VertexInfo(
                ids[B],
                G.labels[B.center],
                v.d,
                tuple(v.char_set),
                v.nu,
                v.n,
                v.order,
                v.t,
                v.t1,
                v.t2,
                v.q,
                v.m,
                tuple(G.labels[i] for i in v.members),
            )
        )
    edges = tuple(EdgeInfo(ids[e.parent], ids[e.child], e.solid) for e in T.edges)
    return tuple(vertices), edges, ids


def lambda_info(G: Germ, R: PolarReport) -> LambdaInfo:
    L = R.L_on_polar
    return LambdaInfo(
        label=R.lam.label,
        contacts=R.lam.contacts,
        delta=R.placement.delta,
        transversal=R.placement.is_transversal,
        balls=tuple(BallInfo(G.labels[e.ball.center], e.ball.radius, e.q, e.d_lambda, e.m) for e in R.entries),
        quotients=tuple(R.quotients.items()),
        q0=R.q0,
        tilde_L=R.tilde_L,
        L_on_polar=PolarExponentInfo(not L.exact, L.upper, L.lower),
        is_special=R.is_special,
        left_strict=R.flags.left_strict,
        right_strict=R.flags.right_strict,
    )


def germ_section(G: Germ) -> tuple[tuple[BranchInfo, ...], tuple[tuple[str, str, Ext], ...]]:
    branches = tuple(
        BranchInfo(lb, c.ord, c.contacts, tuple(_semigroup(c))) for lb, c in zip(G.labels, G.chars)
    )
    contacts = tuple(
        (G.labels[i], G.labels[j], G.d(i, j)) for i in range(G.r) for j in range(i + 1, G.r)
    )
    return branches, contacts


def build_report(
    G: Germ,
    lambdas: Sequence[ExternalBranch] = (),
    poly: str | None = None,
    notes: Sequence[str] = (),
) -> Report:
    """Tree, invariants and one polar section per parameter."""
    problems = validate_germ(G)
    if problems:
        raise InvalidContacts("; ".join(problems))
    T = build_tree(G)
    vertices, edges, ids = _vertex_infos(T)
    branches, contacts = germ_section(G)
    notes = list(notes)
    if not G.is_singular:
        notes.append("the germ is a smooth branch; it has no polar invariants")
        return Report(
            poly, branches, contacts, vertices, edges, ids[T.root], (), Fraction(0), (), "none", (),
            notes=tuple(notes),
        )
    verdict = special_verdict(G)
    components = tuple(
        ComponentInfo(tuple(G.labels[i] for i in comp), M) for comp, M in zip(verdict.components, verdict.M)
    )
    if verdict.exists:
        special = "tangent:" + ",".join(components[verdict.special].branches)
    else:
        special = "none"
    infos = tuple(lambda_info(G, polar_report(G, lam, T)) for lam in lambdas)
    return Report(
        poly,
        branches,
        contacts,
        vertices,
        edges,
        ids[T.root],
        tuple(polar_invariants(G, T).items()),
        lojasiewicz(G, T),
        components,
        special,
        infos,
        notes=tuple(notes),
    )


def format_text(report: Report) -> str:
    """Short human-readable summary."""
    lines = []
    if report.poly is not None:
        lines.append(f"polynomial: {report.poly}")
    for b in report.branches:
        char = ", ".join(fmt(c) for c in b.char) or "smooth"
        lines.append(f"branch {b.label}: ord {b.ord}, characteristic contacts [{char}]")
    for a, b, v in report.contacts:
        lines.append(f"contact({a}, {b}) = {fmt(v)}")
    for v in report.vertices:
        if v.black:
            lines.append(
                f"ball {v.id} d={fmt(v.d)} order={v.order} q={_q(v.q)} m={v.m} members={','.join(v.members)}"
            )
    if report.polar_invariants:
        Q = ", ".join(f"{fmt(q)} (x{m})" for q, m in report.polar_invariants)
        lines.append(f"polar invariants: {Q}")
    if report.L0 is not None:
        lines.append(f"Lojasiewicz exponent: {fmt(report.L0)}")
    for c in report.components:
        lines.append(f"tangential component {{{', '.join(c.branches)}}}: M = {fmt(c.M)}")
    if report.special_direction is not None:
        lines.append(f"special direction: {report.special_direction}")
    for lam in report.lambdas:
        Q = ", ".join(f"{fmt(q)} (x{m})" for q, m in lam.quotients) or "none"
        L = lam.L_on_polar
        Ltext = f"between {fmt(L.lower)} and {fmt(L.upper)} (class dependent)" if L.class_dependent else fmt(L.upper)
        lines.append(
            f"parameter {lam.label}: polar quotients {Q}; max {fmt(lam.q0)}; "
            f"exponent on polar {Ltext}; special {'yes' if lam.is_special else 'no'}"
        )
    if report.ledger is not None:
        kind = "first Newton step only" if report.ledger.partial else "full track tree"
        lines.append(f"derivative ledger ({kind}): total {report.ledger.total} = {report.ledger.p} - 1")
        for track, theta, count, case in report.ledger.entries:
            lines.append(f"  track {track}, inclination {fmt(theta)}: {count} ({case})")
    if report.verify is not None:
        lines.append(verify_text(report.verify))
    for note in report.notes:
        lines.append(f"note: {note}")
    if report.error:
        lines.append(f"error: {report.error}")
    return "\n".join(lines) + "\n"


def verify_text(v: VerifyInfo) -> str:
    lines = [f"verification with lambda = {v.lam}: {'PASS' if v.passed else 'FAIL'}"]
    if v.coordinate_change is not None:
        lines.append("coordinate change: " + ", ".join(fmt(c) for c in v.coordinate_change))
    for c in v.checks:
        tag = "PASS" if c.passed else "FAIL"
        lines.append(f"  {tag} {c.name}: expected {c.expected}, got {c.actual}")
    if v.bound_only:
        lines.append(f"  {v.bound_only} root(s) are bound-only and were charged to the smallest chain ball")
    for note in v.notes:
        lines.append(f"  note: {note}")
    return "\n".join(lines)


__all__ = [
    "BallInfo",
    "BranchInfo",
    "CheckInfo",
    "ComponentInfo",
    "DocumentError",
    "EdgeInfo",
    "GermDocument",
    "LambdaInfo",
    "LambdaSpec",
    "LedgerInfo",
    "PolarExponentInfo",
    "Report",
    "SCHEMA_VERSION",
    "VerifyInfo",
    "VertexInfo",
    "abstract_json",
    "build_report",
    "format_text",
    "germ_section",
    "lambda_info",
    "resolve_lambda",
    "verify_json",
    "verify_text",
]
