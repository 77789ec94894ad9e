"""Command-line entry point.

Exit codes: 0 success, 1 verification mismatch, 2 parse error,
3 validation failure, 4 unsupported branch shape, 5 irrational track.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field, replace
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .branch import InvalidCharData, InvalidGenChar, InvalidSemigroup
from .eggers import build_tree, to_dot
from .polar import BranchOfGerm, NotSmooth, regular_parameter
from .puiseux import GermBounds, probe_contacts, random_germ, random_line_probe
from .rational import fmt
from .report import (
    CheckInfo,
    DocumentError,
    GermDocument,
    LambdaSpec,
    LedgerInfo,
    Report,
    VerifyInfo,
    build_report,
    format_text,
    resolve_lambda,
    verify_json,
    verify_text,
)
from .space import ExternalBranch, Germ, InvalidContacts
from .symbolic import (
    BiPoly,
    IrrationalTrackRoot,
    NonReduced,
    NotAGerm,
    PolyGerm,
    PolySyntaxError,
    UnsupportedBranchShape,
    cross_verify,
    derivative_ledger,
    germ_from_poly,
    parse_poly,
    partial_ledger,
)

OK, MISMATCH, PARSE, VALIDATION, UNSUPPORTED, IRRATIONAL = range(6)


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


@dataclass
class Input:
    """What the user handed us, after coordinate changes."""

    doc: GermDocument
    poly: BiPoly | None = None
    change: tuple[Fraction, ...] | None = None
    notes: list[str] = field(default_factory=list)


# ------------------------------------------------------------------- parsing


def _read_input(args) -> Input:
    if args.poly is not None:
        doc = GermDocument(poly=args.poly)
    elif args.input is None:
        raise CliError(PARSE, "give an input file or --poly")
    else:
        try:
            text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
        except OSError as exc:
            raise CliError(PARSE, f"cannot read {args.input}: {exc.strerror}") from None
        doc = GermDocument.loads(text)
    inp = Input(doc)
    if doc.poly is not None:
        inp.poly = parse_poly(doc.poly)
        if args.change_coords:
            inp.change = _parse_change(args.change_coords)
            inp.poly = inp.poly.substitute_linear(*inp.change)
            inp.notes.append(
                "coordinates changed: f(aX+bY, cX+dY) with a,b,c,d = "
                + ",".join(fmt(c) for c in inp.change)
            )
    elif args.change_coords:
        raise CliError(VALIDATION, "--change-coords needs a polynomial germ")
    return inp


def _parse_change(text: str) -> tuple[Fraction, ...]:
    try:
        a, b, c, d = (Fraction(p.strip()) for p in text.split(","))
    except ValueError:
        raise CliError(PARSE, f"--change-coords expects four rationals a,b,c,d, got {text!r}") from None
    if a * d - b * c == 0:
        raise CliError(VALIDATION, "--change-coords must be invertible")
    return (a, b, c, d)


def _lambda_specs(args, doc: GermDocument) -> list[LambdaSpec]:
    specs = list(doc.lambdas) + [LambdaSpec.parse(s) for s in (args.lam or [])]
    return specs or [LambdaSpec("transversal", "transversal")]


def _poly_lambda(pg: PolyGerm, spec: LambdaSpec) -> ExternalBranch:
    """Parameters that need the polynomial: the axes and lines through 0."""
    G = pg.germ
    if spec.kind == "X":
        return regular_parameter(G, pg.x_contacts(), spec.label)
    if spec.kind == "Y":
        return regular_parameter(G, pg.line_contacts(Fraction(0)), spec.label)
    if spec.kind == "linear":
        a, b = spec.linear
        contacts = pg.x_contacts() if b == 0 else pg.line_contacts(-a / b)
        return regular_parameter(G, contacts, spec.label)
    return resolve_lambda(G, spec)


def _germ_and_lambdas(inp: Input, specs: Sequence[LambdaSpec]) -> tuple[Germ, list[ExternalBranch], PolyGerm | None]:
    if inp.poly is not None:
        pg = germ_from_poly(inp.poly)
        G = pg.germ
        lams = [_poly_lambda(pg, s) for s in specs] if G.is_singular else []
        return G, lams, pg
    G = inp.doc.germ
    lams = [resolve_lambda(G, s) for s in specs] if G.is_singular else []
    return G, lams, None


# ------------------------------------------------------------ verification


def _transversal_line(pg: PolyGerm) -> tuple[Fraction, Fraction]:
    if all(v == 1 for v in pg.x_contacts()):
        return (Fraction(1), Fraction(0))
    c = 1
    while True:
        if all(v == 1 for v in pg.line_contacts(Fraction(-1, c))):
            return (Fraction(1), Fraction(c))
        c += 1


def _linear_branch(pg: PolyGerm, label: str) -> tuple[Fraction, Fraction]:
    src = pg.sources[pg.germ.index(label)]
    F = src.factor
    if src.split or any(a + b != 1 for a, b in F.terms):
        raise CliError(VALIDATION, f"branch {label} is not a line; verification needs a linear parameter")
    return (F.coeff(1, 0), F.coeff(0, 1))


def _to_X(f: BiPoly, a: Fraction, b: Fraction) -> tuple[BiPoly, tuple[Fraction, ...] | None]:
    """Rewrite ``f`` so that the line ``aX + bY`` becomes the new X."""
    if b == 0:
        return f, None
    if a != 0:
        change = (1 / a, -b / a, Fraction(0), Fraction(1))
    else:
        change = (Fraction(0), Fraction(1), 1 / b, Fraction(0))
    return f.substitute_linear(*change), change


def run_verify(inp: Input, spec: LambdaSpec) -> VerifyInfo:
    f = inp.poly
    pg = germ_from_poly(f)
    if spec.kind == "X":
        a, b = Fraction(1), Fraction(0)
    elif spec.kind == "Y":
        a, b = Fraction(0), Fraction(1)
    elif spec.kind == "linear":
        a, b = spec.linear
    elif spec.kind == "transversal":
        a, b = _transversal_line(pg)
    elif spec.kind == "branch":
        a, b = _linear_branch(pg, spec.branch)
    else:
        raise CliError(VALIDATION, "verification needs a linear parameter")
    g, change = _to_X(f, a, b)
    germ = inp.doc.germ
    if germ is not None and change is not None:
        raise CliError(VALIDATION, "an abstract germ can only be compared with lambda = X")
    r = cross_verify(g, germ=germ, raise_on_failure=False)
    notes = list(inp.notes) + list(r.notes)
    if r.delta_X:
        notes.append("the parameter is a branch of the germ (delta = 1); its factor was stripped")
    return VerifyInfo(
        r.passed,
        spec.label,
        change,
        r.delta_X,
        r.bound_only,
        tuple(CheckInfo(c.name, c.passed, c.expected, c.actual) for c in r.checks),
        tuple(notes),
    )


def _ledger_info(pg: PolyGerm) -> LedgerInfo:
    L = derivative_ledger(pg)
    return LedgerInfo(False, L.p, L.total, tuple((e.track, e.theta, e.count, e.case) for e in L.entries))


def _partial_report(f: BiPoly, exc: Exception) -> Report:
    L = partial_ledger(f)
    info = LedgerInfo(True, L.p, L.total, tuple((e.track, e.theta, e.count, e.case) for e in L.entries))
    return Report(str(f), (), (), ledger=info, error=str(exc))


# ----------------------------------------------------------------- commands


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    inp = _read_input(args)
    try:
        G, lams, pg = _germ_and_lambdas(inp, _lambda_specs(args, inp.doc))
    except IrrationalTrackRoot as exc:
        if args.partial and inp.poly is not None:
            R = _partial_report(inp.poly, exc)
            _emit(args, R.dumps() if args.json else format_text(R))
        raise
    R = build_report(G, lams, poly=str(inp.poly) if inp.poly is not None else None, notes=inp.notes)
    code = OK
    if pg is not None:
        extra = {"ledger": _ledger_info(pg), "notes": R.notes + tuple(pg.notes)}
        if args.verify:
            v = run_verify(inp, LambdaSpec("X", "X"))
            extra["verify"] = v
            code = OK if v.passed else MISMATCH
        R = replace(R, **extra)
    _emit(args, R.dumps() if args.json else format_text(R))
    return code


def cmd_tree(args) -> int:
    inp = _read_input(args)
    G = germ_from_poly(inp.poly).germ if inp.poly is not None else inp.doc.germ
    T = build_tree(G)
    if args.dot:
        _emit(args, to_dot(T))
        return OK
    R = build_report(G, (), poly=str(inp.poly) if inp.poly is not None else None)
    if args.json:
        tree = R.to_json()["tree"]
        _emit(args, json.dumps(tree, indent=2, ensure_ascii=False) + "\n")
    else:
        lines = []
        for v in R.vertices:
            shape = f"d={fmt(v.d)}" if v.black else f"branch {v.center}"
            lines.append(f"{v.id}: {shape}")
        for e in R.edges:
            lines.append(f"{e.parent} -> {e.child} ({'solid' if e.solid else 'discontinuous'})")
        _emit(args, "\n".join(lines) + "\n")
    return OK


def cmd_verify(args) -> int:
    inp = _read_input(args)
    if inp.poly is None:
        raise CliError(VALIDATION, "verify needs a polynomial")
    specs = [LambdaSpec.parse(s) for s in (args.lam or ["X"])]
    results = [run_verify(inp, s) for s in specs]
    if args.json:
        payload = {"schema_version": 1, "poly": str(inp.poly), "results": [verify_json(v) for v in results]}
        _emit(args, json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    else:
        _emit(args, "\n".join(verify_text(v) for v in results) + "\n")
    return OK if all(v.passed for v in results) else MISMATCH


def random_document(seed: int, bounds: GermBounds) -> GermDocument:
    """Abstract germ document with a transversal parameter and one random line."""
    G, branches = random_germ(seed, bounds)
    rng = random.Random(f"probe-{seed}")
    probe = random_line_probe(rng, bounds)
    contacts = probe_contacts(probe, branches)
    lambdas = [LambdaSpec("transversal", "transversal")]
    lambdas.append(LambdaSpec("line", "contacts", contacts=tuple(zip(G.labels, contacts))))
    return GermDocument(germ=G, lambdas=tuple(lambdas))


def cmd_random_germ(args) -> int:
    bounds = GermBounds(
        max_branches=args.max_branches,
        max_pairs=args.max_pairs,
        max_denominator=args.max_denominator,
        max_exponent=args.max_exponent,
    )
    _emit(args, random_document(args.seed, bounds).dumps())
    return OK


# -------------------------------------------------------------------- main


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="germ document (JSON); '-' reads standard input")
    p.add_argument("--poly", help="polynomial given inline instead of a document")
    p.add_argument("--change-coords", metavar="a,b,c,d", help="replace f by f(aX+bY, cX+dY) first")
    p.add_argument("--out", help="write the output to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="equising", description="Exact invariants of plane curve singularities.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="tree, invariants and polar data of a germ")
    _add_input(p)
    p.add_argument(
        "--lambda", dest="lam", action="append",
        help="regular parameter: a smooth branch label, transversal, X, Y or linear:a,b (the line aX+bY)",
    )
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.add_argument("--partial", action="store_true", help="on an irrational track, still emit the first-step ledger")
    p.add_argument("--verify", action="store_true", help="add the polynomial cross-check with lambda = X")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("tree", help="the tree of balls")
    _add_input(p)
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("verify", help="cross-check the combinatorial predictions on a polynomial")
    _add_input(p)
    p.add_argument("--lambda", dest="lam", action="append", help="linear parameter: X, Y, linear:a,b, transversal or a line branch")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("random-germ", help="a random valid abstract germ document")
    p.add_argument("seed", type=int)
    p.add_argument("--max-branches", type=int, default=4)
    p.add_argument("--max-pairs", type=int, default=2)
    p.add_argument("--max-denominator", type=int, default=3)
    p.add_argument("--max-exponent", type=int, default=4)
    p.add_argument("--out")
    p.set_defaults(func=cmd_random_germ)
    return parser


_ERROR_CODES = (
    (IrrationalTrackRoot, IRRATIONAL),
    (UnsupportedBranchShape, UNSUPPORTED),
    ((DocumentError, PolySyntaxError), PARSE),
    (
        (InvalidContacts, InvalidSemigroup, InvalidCharData, InvalidGenChar, NotAGerm, NonReduced,
         NotSmooth, BranchOfGerm, KeyError),
        VALIDATION,
    ),
)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"equising: {exc}", file=sys.stderr)
        return exc.code
    except Exception as exc:
        for kinds, code in _ERROR_CODES:
            if isinstance(exc, kinds):
                message = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
                print(f"equising: {type(exc).__name__}: {message}", file=sys.stderr)
                return code
        raise


if __name__ == "__main__":
    sys.exit(main())
