"""Scroll types from section ladders, hyperplane scrolls, b-invariants."""

import pytest

from k3picard import (Model, elliptic_pencils, generic_hyperplane_scroll,
                      hyperplane_extrapolated, scroll_type,
                      section_h0_from_scroll, tetragonal_b_invariants)
from k3picard.registry import EXPECTED

from conftest import model


def pencil(m, degree):
    return elliptic_pencils(m, degree)[0]


@pytest.mark.parametrize("name", [n for n in sorted(EXPECTED)
                                  if "scroll" in EXPECTED[n]])
def test_frozen_scroll_types(name):
    m = model(name)
    deg = 3 if elliptic_pencils(m, 3) else 4
    t = scroll_type(m, pencil(m, deg))
    assert t == EXPECTED[name]["scroll"]
    assert sum(t) == EXPECTED[name]["genus"] + 1 - deg
    assert t == tuple(sorted(t, reverse=True))


@pytest.mark.parametrize("name", [n for n in sorted(EXPECTED)
                                  if "hyperplane" in EXPECTED[n]])
def test_frozen_hyperplane_scrolls(name):
    t = EXPECTED[name]["scroll"]
    assert generic_hyperplane_scroll(t) == EXPECTED[name]["hyperplane"]


def test_scroll_type_rejects_wrong_degree():
    m = model("controls/g7-pencil5")
    with pytest.raises(ValueError):
        scroll_type(m, pencil(m, 5))


def test_scroll_type_rejects_non_isotropic():
    m = model("L_T7")
    with pytest.raises(ValueError):
        scroll_type(m, m.H)


def test_scroll_type_rejects_non_nef_isotropic():
    m = model("L_JK7")
    # E + G is isotropic of degree 3 and effective, but pairs -1 with G
    with pytest.raises(ValueError):
        scroll_type(m, (1, 1, 0, 0))


def test_scroll_type_quasi_polarized_models():
    # the distinguished member keeps a scroll even though H is only quasi
    m = model("L_JK10")
    assert scroll_type(m, (1, 0)) == (6, 2, 0)


@pytest.mark.parametrize("t,want", [
    ((1, 1, 1), (2, 1)),
    ((2, 2, 1), (3, 2)),
    ((2, 2, 2), (3, 3)),
    ((3, 2, 2), (4, 3)),
    ((3, 3, 2), (4, 4)),
    ((3, 1, 1), (3, 2)),
    ((3, 2, 1, 0), (3, 2, 1)),   # cone: drop one zero, keep the rest
    ((4, 1, 0), (4, 1)),
    ((4, 2, 0), (4, 2)),
    ((5, 2, 0), (5, 2)),
    ((6, 2, 0), (6, 2)),
    ((2, 2, 1, 1), (2, 2, 2)),   # balanced redistribution
    ((2, 2, 2, 1), (3, 2, 2)),
    ((1, 1, 1, 1), (2, 1, 1)),
])
def test_generic_hyperplane_scroll(t, want):
    assert generic_hyperplane_scroll(t) == want


@pytest.mark.parametrize("t", [(3,), (), (1, 2), (2, 1, -1)])
def test_generic_hyperplane_scroll_rejects(t):
    with pytest.raises(ValueError):
        generic_hyperplane_scroll(t)


@pytest.mark.parametrize("t,want", [
    ((4, 4), False),
    ((4, 3), False),
    ((2, 1), False),
    ((5, 4), True),           # would be a genus-11 trigonal hyperplane
    ((2, 2, 2, 1, 1), True),  # 5-dimensional scroll
])
def test_hyperplane_extrapolated(t, want):
    assert hyperplane_extrapolated(t) is want


@pytest.mark.parametrize("f,j,want", [
    ((4, 1), 0, 7),
    ((4, 1), 3, 2),     # the quasi-polarized genus-7 restriction value
    ((4, 1), 5, 0),
    ((3, 2), 3, 1),
    ((3, 2), 4, 0),
    ((2, 1), 1, 3),
    ((6, 2), 6, 1),
])
def test_section_h0_from_scroll(f, j, want):
    assert section_h0_from_scroll(f, j) == want


def test_section_h0_from_scroll_rejects():
    with pytest.raises(ValueError):
        section_h0_from_scroll((3, 2, 1), 0)
    with pytest.raises(ValueError):
        section_h0_from_scroll((3, 2), -1)


@pytest.mark.parametrize("name,want", [
    ("L_II", (2, 0, False)),
    ("controls/g7-one-pencil4", (1, 1, True)),
    ("controls/g8-pencil4", (2, 1, True)),
    ("controls/g9-pencil4", (None, None, True)),
])
def test_tetragonal_b_invariants(name, want):
    bs = tetragonal_b_invariants(model(name))
    assert (bs.b1, bs.b2, bs.b2_positive) == want


def test_b_invariants_sum():
    # b1 + b2 = g - 5 whenever both are determined
    for name in ("L_II", "controls/g7-one-pencil4", "controls/g8-pencil4"):
        m = model(name)
        bs = tetragonal_b_invariants(m)
        assert bs.b1 + bs.b2 == EXPECTED[name]["genus"] - 5


@pytest.mark.parametrize("name", ["L_T7", "L_III", "L_V",
                                  "controls/g10-pencil4"])
def test_b_invariants_rejected_outside_scope(name):
    # trigonal, sextic-witnessed, divisible, and genus-10 models all fall
    # outside the pencil-only tetragonal window
    with pytest.raises(ValueError):
        tetragonal_b_invariants(model(name))
