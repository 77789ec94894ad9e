from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import SMOOTH, germ_line_and_parabola, germ_mixed_tangents, germ_node
from equising.branch import CharData
from equising.eggers import germs_isomorphic
from equising.rational import INF
from equising.space import Germ
from equising.symbolic import (
    BiPoly,
    FaceNotOnPolygon,
    IrrationalTrackRoot,
    MismatchReport,
    NonReduced,
    NotAGerm,
    PolySyntaxError,
    UnsupportedBranchShape,
    cross_verify,
    derivative_ledger,
    extract_branch,
    face_stats,
    format_poly,
    germ_from_poly,
    intersection_by_resultant,
    intersection_mult,
    newton_polygon,
    parse_poly,
    partial_ledger,
)
from equising.symbolic.polygon import Face

CUSP_TRIPLE = "Y^7 + X*Y^4 + X^2*Y^2 - 2*X^3"
MIXED = "(Y^5+X^2)*Y*(Y^2-X^4)"
TANGENT_PAIR = "Y^4 - X^2"
TANGENT_PAIR_TWIN = "Y^4 - X^2 + X^2*Y"

P = parse_poly


# ---------------------------------------------------------------- parsing


@pytest.mark.parametrize(
    "text, nterms",
    [(CUSP_TRIPLE, 4), ("0", 0), (TANGENT_PAIR_TWIN, 3), ("(X+Y)^3", 4), ("-X*Y + 1/2*X^2", 2)],
)
def test_parse_term_counts(text, nterms):
    assert len(P(text).terms) == nterms


def test_parse_arithmetic():
    assert P("(X+Y)^2 - X^2 - Y^2") == P("2*X*Y")
    assert P("x*y") == P("X*Y")
    assert P("3/6*X") == BiPoly({(1, 0): F(1, 2)})
    assert P("0").is_zero


@pytest.mark.parametrize("text", ["X^", "X + * Y", "Z", "(X", "X^-1", "1/0"])
def test_parse_errors(text):
    with pytest.raises(PolySyntaxError):
        P(text)


@given(st.dictionaries(st.tuples(st.integers(0, 6), st.integers(0, 6)), st.fractions(max_denominator=7).filter(bool), max_size=6))
def test_format_parse_roundtrip(terms):
    f = BiPoly(terms)
    assert P(format_poly(f)) == f


# ---------------------------------------------------------- Newton polygon


def test_polygon_of_cusp_triple():
    poly = newton_polygon(P(CUSP_TRIPLE))
    assert [(S.hi, S.lo) for S in poly.faces] == [((0, 7), (1, 4)), ((1, 4), (3, 0))]
    assert poly.inclinations == (F(1, 3), F(1, 2))
    assert [S.eps for S in poly.faces] == [0, -1]


def test_polygon_of_tangent_pair():
    f = P(TANGENT_PAIR)
    (S,) = newton_polygon(f).faces
    assert (S.hi, S.lo, S.incl, S.eps) == ((0, 4), (2, 0), F(1, 2), -1)
    stats = face_stats(f, S)
    assert (stats.t, stats.d) == (4, 0)


def test_polygon_of_node():
    poly = newton_polygon(P("X*Y"))
    assert poly.faces == () and (poly.delta_X, poly.delta_Y) == (1, 1)


def test_face_stats_of_degenerate_face():
    f = P("Y^4 - 2*X*Y^2 + X^2 - X^5")
    (S,) = newton_polygon(f).faces
    stats = face_stats(f, S)
    assert (stats.t, stats.d) == (2, 2)
    with pytest.raises(FaceNotOnPolygon):
        face_stats(f, Face((F(0), 5), (F(2), 0)))


def test_face_stats_of_cusp():
    f = P("Y^5 + X^2")
    (S,) = newton_polygon(f).faces
    assert (face_stats(f, S).t, face_stats(f, S).d) == (5, 0)


# ---------------------------------------------------------- intersections


@pytest.mark.parametrize(
    "f, g, value",
    [
        ("Y^2 - X", "Y^2 + X", 2),
        ("Y", "X", 1),
        ("Y^5 + X^2", "Y", 2),
        ("Y^2 - X^3", "Y^2 - X^3 + X^5", 10),
        ("Y", "Y + X^4", 4),
        ("Y^2 - X^3", "Y^3 - X^2", 4),
        ("X*Y", "X*Y + X^9", INF),
        ("1 + X", "Y", 0),
    ],
)
def test_intersection_multiplicity(f, g, value):
    assert intersection_mult(P(f), P(g)) == value
    assert intersection_mult(P(g), P(f)) == value


@pytest.mark.parametrize("bound", [1, 3, 7, 10, 12])
def test_bounded_intersection_is_capped(bound):
    f, g = P("Y^2 - X^3"), P("Y^2 - X^3 + X^5")
    assert intersection_mult(f, g, bound=bound) == min(10, bound)
    assert intersection_mult(P("X*Y"), P("X*Y + X^9"), bound=bound) == bound


def _small_poly():
    coeff = st.integers(-3, 3)
    return st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), coeff.filter(bool), min_size=1, max_size=5).map(
        lambda t: BiPoly({k: F(v) for k, v in t.items() if k != (0, 0)})
    )


@settings(max_examples=60, deadline=None)
@given(_small_poly(), _small_poly())
def test_fulton_agrees_with_resultant(f, g):
    if f.is_zero or g.is_zero:
        return
    try:
        expected = intersection_by_resultant(f, g).value
    except ValueError:
        return
    assert intersection_mult(f, g) == expected


# ---------------------------------------------------------- branch shapes


def test_extract_branch_examples():
    assert extract_branch(P("Y^5 + X^2")) == CharData(2, (F(5, 2),))
    assert extract_branch(P("Y - X^2")).is_smooth
    with pytest.raises(UnsupportedBranchShape):
        extract_branch(P("Y^2 - 2*X^2"))
    with pytest.raises(NotAGerm):
        extract_branch(P("1 + Y"))


def test_germ_of_mixed_product():
    pg = germ_from_poly(P(MIXED))
    assert germs_isomorphic(pg.germ, germ_mixed_tangents())


def test_germ_of_line_and_parabola():
    pg = germ_from_poly(P("X*(Y^2+X)"))
    assert germs_isomorphic(pg.germ, germ_line_and_parabola())
    assert pg.delta_X == 1


def test_germ_of_node():
    assert germs_isomorphic(germ_from_poly(P("X*Y")).germ, germ_node())


def test_split_rational_factor_gives_numbered_branches():
    pg = germ_from_poly(P(CUSP_TRIPLE))
    assert pg.germ.labels == tuple(f"{CUSP_TRIPLE}#{k}" for k in (1, 2, 3))
    assert all(c.is_smooth for c in pg.germ.chars)
    assert pg.x_contacts() == (3, 2, 2)
    two = germ_from_poly(P("Y^2 - 2*X^2")).germ
    assert two.r == 2 and two.d(0, 1) == 1


def test_tangent_pair_twins_share_germ_data():
    a = germ_from_poly(P(TANGENT_PAIR)).germ
    b = germ_from_poly(P(TANGENT_PAIR_TWIN)).germ
    assert a.chars == b.chars and a.contact == b.contact


@pytest.mark.parametrize("text, error", [("(Y^2-X^3)^2", NonReduced), ("1+X", NotAGerm), ("0", NotAGerm)])
def test_germ_errors(text, error):
    with pytest.raises(error):
        germ_from_poly(P(text))


def test_supplied_factors_must_match():
    with pytest.raises(ValueError):
        germ_from_poly(P("X*Y"), factors=[P("X"), P("Y + X")])
    pg = germ_from_poly(P("X*Y"), factors=[P("Y"), P("X")])
    assert pg.germ.r == 2


# ------------------------------------------------------------------ ledger


def test_ledger_of_cusp_triple():
    L = derivative_ledger(germ_from_poly(P(CUSP_TRIPLE)))
    assert L.p == 7 and L.total == 6 and L.conserved
    assert [(e.theta, e.count) for e in L.entries] == [(F(1, 3), 3), (F(1, 2), 3)]
    assert sum(e.bound_count for e in L.entries) == 1


@pytest.mark.parametrize("text", [TANGENT_PAIR, TANGENT_PAIR_TWIN])
def test_ledger_of_tangent_pairs_is_bound_only(text):
    L = derivative_ledger(germ_from_poly(P(text)))
    assert L.total == 3
    assert sum(e.bound_count for e in L.entries) == 3


def test_ledger_strips_the_axis_factor():
    L = derivative_ledger(germ_from_poly(P("X*(Y^2+X)")))
    assert L.p == 2 and L.total == 1


def test_partial_ledger_counts_deeper_roots_in_bulk():
    f = P("(Y^2-2*X^3)^2-X^7")
    with pytest.raises(IrrationalTrackRoot):
        germ_from_poly(f)
    L = partial_ledger(f)
    assert L.partial and L.total == 3
    assert [e.track for e in L.entries] == ["0", "deeper"]


# ------------------------------------------------------------ verification


@pytest.mark.parametrize(
    "text", [MIXED, CUSP_TRIPLE, "X*(Y^2+X)", TANGENT_PAIR, TANGENT_PAIR_TWIN, "X*Y", "Y^5+X^2", "Y^2-2*X^2"]
)
def test_cross_verify_goldens(text):
    report = cross_verify(P(text))
    assert report.passed, [c for c in report.failures]


def test_cross_verify_notes_axis_branch():
    report = cross_verify(P("X*(Y^2+X)"))
    assert report.delta_X == 1 and report.bound_only == 1


def test_cross_verify_detects_a_corrupted_germ():
    pg = germ_from_poly(P(MIXED))
    G = pg.germ
    i, j = G.labels.index("Y"), G.labels.index("Y - X^2")
    rows = [list(r) for r in G.contact]
    rows[i][j] = rows[j][i] = F(3)
    k = G.labels.index("Y + X^2")
    rows[j][k] = rows[k][j] = F(2)
    bad = Germ(G.labels, G.chars, tuple(tuple(r) for r in rows))
    report = cross_verify(P(MIXED), germ=bad, raise_on_failure=False)
    assert not report.passed
    with pytest.raises(MismatchReport):
        cross_verify(P(MIXED), germ=bad)
