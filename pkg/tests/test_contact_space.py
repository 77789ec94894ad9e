from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import SMOOTH, germ_mixed_tangents, two_five_branch
from equising.puiseux import GermBounds, random_germ
from equising.rational import INF
from equising.space import (
    Ball,
    Cmp,
    ExternalBranch,
    Germ,
    InvalidContacts,
    ball,
    ball_cmp,
    ball_members,
    balls_intersect,
    chain_of_branch,
    dist_ball_branch,
    dist_via_germ,
    external_violations,
    position_ball,
    validate_germ,
)


def three_tangent_smooth() -> Germ:
    return Germ.from_pairs(["f1", "f2", "f3"], [SMOOTH] * 3, {(0, 1): 2, (0, 2): 2, (1, 2): 2})


def polar_probe_germ():
    """Three smooth branches with pairwise contact 2, the axis X and two polar branches."""
    G = three_tangent_smooth()
    lam = ExternalBranch(SMOOTH, (2, 2, 3), label="X")
    g1 = ExternalBranch(SMOOTH, (1, 1, 1), label="g1")
    g3 = ExternalBranch(SMOOTH, (2, 2, 3), label="g3")
    return G, lam, g1, g3


# ------------------------------------------------------------ validation


def test_mixed_germ_is_valid(mixed):
    assert validate_germ(mixed) == []


def test_node_is_valid():
    assert validate_germ(Germ.from_pairs(["a", "b"], [SMOOTH, SMOOTH], {(0, 1): 1})) == []


def test_triangle_violation_names_the_triple():
    G = Germ.from_pairs(["a", "b", "c"], [SMOOTH] * 3, {(0, 1): 3, (1, 2): 3, (0, 2): 2})
    problems = validate_germ(G)
    assert len(problems) == 1 and "(a,b,c)" in problems[0]


@pytest.mark.parametrize(
    "pairs, fragment",
    [
        ({(0, 1): F(1, 2)}, "below 1"),
        ({(0, 1): INF}, "infinite contact"),
    ],
)
def test_pair_violations(pairs, fragment):
    G = Germ.from_pairs(["a", "b"], [SMOOTH, SMOOTH], pairs)
    assert any(fragment in p for p in validate_germ(G))


def test_asymmetric_matrix_is_reported():
    G = Germ(("a", "b"), (SMOOTH, SMOOTH), ((INF, 2), (3, INF)))
    assert any("symmetry" in p for p in validate_germ(G))


def test_char_compatibility():
    # a (2,5) cusp and a smooth branch cannot share contact above 5/2
    G = Germ.from_pairs(["a", "b"], [two_five_branch(), SMOOTH], {(0, 1): 3})
    assert any("char-compatibility" in p for p in validate_germ(G))


def test_realizability_of_characteristic_contact():
    # two smooth branches cannot meet at a characteristic contact
    G = Germ.from_pairs(["a", "b"], [SMOOTH, SMOOTH], {(0, 1): F(3, 2)})
    assert any("realizability" in p for p in validate_germ(G))


def test_duplicate_labels_and_missing_pairs():
    G = Germ.from_pairs(["a", "a"], [SMOOTH, SMOOTH], {(0, 1): 1})
    assert "branch labels are not distinct" in validate_germ(G)
    with pytest.raises(InvalidContacts):
        Germ.from_pairs(["a", "b", "c"], [SMOOTH] * 3, {(0, 1): 1})


def test_external_branch_label_collision_does_not_mask_errors():
    G = three_tangent_smooth()
    h = ExternalBranch(SMOOTH, (2, 2, 3), label="f1")
    assert external_violations(h, G) == []
    bad = ExternalBranch(SMOOTH, (1, 2, 3), label="f1")
    assert any("D3" in p for p in external_violations(bad, G))


def test_external_branch_identified_with_germ_branch():
    G = three_tangent_smooth()
    h = ExternalBranch(SMOOTH, (INF, 2, 2))
    assert h.identical_to == 0
    assert external_violations(h, G) == []
    with pytest.raises(InvalidContacts):
        ExternalBranch(SMOOTH, (INF, INF, 2))


# ------------------------------------------------------------------ balls


def test_balls_intersect_examples(mixed):
    assert balls_intersect(ball(mixed, 1, 2), ball(mixed, 2, 2), mixed)
    assert balls_intersect(ball(mixed, 0, 1), ball(mixed, 0, F(5, 2)), mixed)
    assert not balls_intersect(ball(mixed, 0, F(5, 2)), ball(mixed, 1, 2), mixed)


def test_ball_cmp_examples(mixed):
    root = ball(mixed, 0, 1)
    B1 = ball(mixed, 0, F(5, 2))
    B2 = ball(mixed, 1, 2)
    assert ball_cmp(root, B1, mixed) is Cmp.LESS
    assert ball_cmp(B1, root, mixed) is Cmp.GREATER
    assert ball_cmp(ball(mixed, 1, 2), ball(mixed, 2, 2), mixed) is Cmp.EQUAL
    assert ball_cmp(B1, B2, mixed) is Cmp.INCOMPARABLE


def test_ball_is_canonical(mixed):
    assert ball(mixed, 3, 2) == ball(mixed, 1, 2) == Ball(1, F(2))
    assert ball_members(ball(mixed, 3, 2), mixed) == [1, 2, 3]
    with pytest.raises(ValueError):
        ball(mixed, 0, F(1, 2))


def test_dist_ball_branch_examples():
    G, lam, _, _ = polar_probe_germ()
    assert dist_ball_branch(ball(G, 0, 2), lam, G) == 2
    mixed = germ_mixed_tangents()
    h = ExternalBranch(SMOOTH, (1, 2, 2, 2))
    assert dist_ball_branch(ball(mixed, 0, F(5, 2)), h, mixed) == 1
    # a ball whose centre is h itself
    assert dist_ball_branch(Ball(h, F(3)), h, mixed) == 3


def test_dist_via_germ_examples():
    G, lam, g1, g3 = polar_probe_germ()
    assert dist_via_germ(g3, lam, G) == 3
    assert dist_via_germ(g1, lam, G) == 1


def test_chain_of_axis_probe():
    G, lam, _, _ = polar_probe_germ()
    chain = chain_of_branch(lam, G)
    assert chain.balls == (ball(G, 0, 2), ball(G, 2, 3))
    assert chain.minimum == ball(G, 0, 2)
    assert position_ball(lam, G) == ball(G, 2, 3)


def test_chain_of_transversal_probe(mixed):
    h = ExternalBranch(SMOOTH, (1, 1, 1, 1))
    assert chain_of_branch(h, mixed).balls == (ball(mixed, 0, 1),)


def test_chain_of_germ_branch_ends_at_infinity(mixed):
    h = ExternalBranch(SMOOTH, (1, INF, 2, 2))
    assert position_ball(h, mixed).radius == INF


# -------------------------------------------------------------- properties


def _all_balls(G):
    radii = {G.d(i, j) for i in range(G.r) for j in range(G.r)} | {F(1)}
    return {ball(G, i, R) for i in range(G.r) for R in radii}


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6))
def test_random_germs_are_ultrametric(seed):
    G, _ = random_germ(seed, GermBounds())
    assert validate_germ(G) == []
    for i, j, k in combinations(range(G.r), 3):
        a, b, _ = sorted([G.d(i, j), G.d(i, k), G.d(j, k)])
        assert a == b


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6))
def test_every_member_is_a_center_and_balls_nest(seed):
    G, _ = random_germ(seed, GermBounds())
    balls = _all_balls(G)
    for B in balls:
        for k in ball_members(B, G):
            assert ball_cmp(Ball(k, B.radius), B, G) is Cmp.EQUAL
    for A in balls:
        for B in balls:
            sa, sb = set(ball_members(A, G)), set(ball_members(B, G))
            if balls_intersect(A, B, G):
                assert sa <= sb or sb <= sa
            else:
                assert not sa & sb
