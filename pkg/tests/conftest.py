"""Golden germs shared by the test modules."""

from __future__ import annotations

from fractions import Fraction

import pytest

from equising.branch import CharData, char_from_betas
from equising.space import Germ

SMOOTH = CharData.smooth()


def two_five_branch() -> CharData:
    return char_from_betas(2, 5)


def germ_mixed_tangents() -> Germ:
    """A (2,5) cusp transverse to three smooth branches with pairwise contact 2."""
    return Germ.from_pairs(
        ["f1", "f2", "f3", "f4"],
        [two_five_branch(), SMOOTH, SMOOTH, SMOOTH],
        {(0, 1): 1, (0, 2): 1, (0, 3): 1, (1, 2): 2, (1, 3): 2, (2, 3): 2},
    )


def germ_three_tangent_lines() -> Germ:
    """Three smooth branches with pairwise contact 2; X meets them with contacts 2, 2, 3."""
    return Germ.from_pairs(["f1", "f2", "f3"], [SMOOTH] * 3, {(0, 1): 2, (0, 2): 2, (1, 2): 2})


def germ_line_and_parabola() -> Germ:
    """``X`` and ``Y^2 + X``: two smooth branches with contact 2."""
    return Germ.from_pairs(["X", "Y^2 + X"], [SMOOTH, SMOOTH], {(0, 1): 2})


def germ_tangent_pair() -> Germ:
    """``Y^2 - X`` and ``Y^2 + X``."""
    return Germ.from_pairs(["Y^2 - X", "Y^2 + X"], [SMOOTH, SMOOTH], {(0, 1): 2})


def germ_node() -> Germ:
    """``XY``: two transverse lines."""
    return Germ.from_pairs(["X", "Y"], [SMOOTH, SMOOTH], {(0, 1): 1})


@pytest.fixture
def mixed():
    return germ_mixed_tangents()


@pytest.fixture
def three_lines():
    return germ_three_tangent_lines()


F = Fraction


def pytest_terminal_summary(terminalreporter):
    module = __import__("sys").modules.get("test_acceptance")
    lines = module.summary_lines() if module else []
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
