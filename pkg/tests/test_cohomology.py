"""Peeling engine: section ladders, duality identities, positivity tests,
and curve-restriction estimates.  Ladder values are frozen from hand
computations in the rank-2 cases, where peeling can be followed step by
step.
"""

import pytest
from hypothesis import given, settings, strategies as st

from k3picard import (Model, chi_rr, cohomology_dims, elliptic_pencils,
                      fixed_decomposition, h0_restricted, is_base_point_free,
                      is_effective, is_nef, is_very_ample, pair,
                      tie_break_class, validate_model, very_ample_obstruction)
from k3picard.cohomology import RestrictionEstimate
from k3picard.lattice import vadd, vscale, vsub
from k3picard.registry import EXPECTED, REGISTRY

from conftest import degree_box, model


def first_pencil(m):
    for d in range(3, 13):
        found = elliptic_pencils(m, d)
        if found:
            return found[0]
    raise AssertionError("registry model without a low-degree pencil")


@pytest.mark.parametrize("name", [n for n in sorted(EXPECTED)
                                  if "ladder" in EXPECTED[n]])
def test_frozen_section_ladders(name):
    m = model(name)
    e = first_pencil(m)
    want = EXPECTED[name]["ladder"]
    got = tuple(cohomology_dims(m, vsub(m.H, vscale(j, e))).h0
                for j in range(len(want)))
    assert got == want


def test_h0_terminal_values():
    m = model("L_T7")
    assert cohomology_dims(m, (0, 0)) == (1, 0, 1)
    assert cohomology_dims(m, (0, 1)).h0 == 2          # pencil
    assert cohomology_dims(m, (0, 3)).h0 == 4          # non-primitive pencil
    assert cohomology_dims(m, m.H).h0 == 8             # nef big
    assert cohomology_dims(m, (-1, 0)).h0 == 0
    assert cohomology_dims(m, (-1, 0)).h2 == 8         # dual side


def test_single_root_class_h0():
    m = model("L_VI")
    assert cohomology_dims(m, (0, 1)).h0 == 1
    assert cohomology_dims(m, (0, 2)).h0 == 1          # 2x a fixed root
    m = model("L_T9")
    assert cohomology_dims(m, (1, -3)).h0 == 1


@pytest.mark.parametrize("name", ["L_T7", "L_VI", "L_92", "L_II", "L_JK7",
                                  "L_JK10"])
def test_euler_and_serre_identities(name):
    m = model(name)
    for v in degree_box(m, 3, 30):
        dims = cohomology_dims(m, v)
        assert dims.h0 - dims.h1 + dims.h2 == chi_rr(m, v)
        assert dims.h2 == cohomology_dims(m, tuple(-c for c in v)).h0
        assert min(dims) >= 0


@given(st.integers(-8, 8), st.integers(-8, 8))
@settings(max_examples=120, deadline=None)
def test_euler_serre_property_l92(a, b):
    m = model("L_92")
    dims = cohomology_dims(m, (a, b))
    assert dims.h0 - dims.h1 + dims.h2 == chi_rr(m, (a, b))
    assert dims.h2 == cohomology_dims(m, (-a, -b)).h0


def test_h0_at_least_chi_on_effectives():
    m = model("L_I")
    for v in degree_box(m, 2, 20):
        if v == m.zero or not is_effective(m, v):
            continue
        assert cohomology_dims(m, v).h0 >= chi_rr(m, v)


def test_pencil_multiples(any_model):
    m = any_model
    for d in range(3, 7):
        for e in elliptic_pencils(m, d):
            for k in range(1, 5):
                dims = cohomology_dims(m, vscale(k, e))
                assert dims.h0 == k + 1
                assert dims.h1 == k - 1
                assert dims.h2 == 0


def test_fixed_decomposition_moving_plus_fixed():
    m = model("L_VI")
    moving, fixed = fixed_decomposition(m, (1, 2))
    assert moving == (1, 1)
    assert fixed == [(0, 1)]
    assert cohomology_dims(m, (1, 2)).h0 == cohomology_dims(m, moving).h0
    # nef classes carry no fixed part
    moving, fixed = fixed_decomposition(m, m.H)
    assert moving == m.H and fixed == []


def test_fixed_decomposition_needs_effective():
    with pytest.raises(ValueError):
        fixed_decomposition(model("L_T7"), (-1, 0))


def test_fixed_part_size_bounded_by_degree():
    m = model("L_JK7")
    for v in degree_box(m, 2, 20):
        if pair(m, v, m.H) <= 0 or not is_effective(m, v):
            continue
        moving, fixed = fixed_decomposition(m, v)
        assert vadd(moving, [sum(c) for c in zip(*([m.zero] + fixed))]) == v
        assert len(fixed) <= 60   # generous cap: peeling terminates fast


def test_is_nef():
    m = model("L_VI")
    assert is_nef(m, m.H)
    assert is_nef(m, (1, 0))
    assert not is_nef(m, (1, 2))     # effective, pairs -2 with the root
    assert not is_nef(m, (0, 1))     # the root itself
    assert is_nef(m, m.zero)
    with pytest.raises(ValueError):
        is_nef(m, (-1, 0))


def test_base_point_free():
    m = Model(gram=((0, 1), (1, -2)), H=(5, 2))
    assert validate_model(m) == []
    d = (4, 1)
    assert is_nef(m, d)
    assert pair(m, (1, 0), d) == 1
    assert not is_base_point_free(m, d)
    assert is_base_point_free(m, m.H)
    assert is_base_point_free(m, (1, 0))   # pencils are base point free


@pytest.mark.parametrize("name", ["L_III", "L_IV", "L_V", "L_VI", "L_DM",
                                  "L_92", "L_T5", "L_T9"])
def test_registry_polarizations_very_ample(name):
    m = model(name)
    assert very_ample_obstruction(m, m.H) is None
    assert is_very_ample(m, m.H)


def test_very_ample_obstruction_small_pencil():
    m = Model(gram=((12, 2), (2, 0)), H=(1, 0))
    code, witness = very_ample_obstruction(m, m.H)
    assert code == "small-pencil"
    assert pair(m, witness, witness) == 0
    assert pair(m, witness, m.H) == 2


def test_very_ample_obstruction_contracted_root():
    m = model("L_JK7")
    code, witness = very_ample_obstruction(m, m.H)
    assert code == "contracted-root"
    assert pair(m, witness, m.H) == 0
    assert pair(m, witness, witness) == -2


def test_very_ample_obstruction_double_genus2():
    m = Model(gram=((2,),), H=(2,))
    code, witness = very_ample_obstruction(m, m.H)
    assert code == "double-genus2"
    assert witness == (1,)


def test_very_ample_obstruction_preconditions():
    m = model("L_T7")
    with pytest.raises(ValueError):
        very_ample_obstruction(m, (0, 1))    # square 0 < 8
    with pytest.raises(ValueError):
        very_ample_obstruction(m, (-1, 0))   # not effective


def test_tie_break_absent_on_ample_models():
    assert tie_break_class(model("L_T9")) is None
    assert tie_break_class(model("L_II")) is None


@pytest.mark.parametrize("name", ["L_JK7", "L_JK8", "L_JK9", "L_JK10"])
def test_tie_break_orients_the_contracted_chamber(name):
    from k3picard import classes_with
    m = model(name)
    b = tie_break_class(m)
    assert b is not None
    walls = classes_with(m, 0, -2)
    assert walls
    for w in walls:
        assert pair(m, b, w) != 0
    # basis vectors that are contracted roots stay effective
    for i in range(m.rank):
        ei = tuple(1 if j == i else 0 for j in range(m.rank))
        if ei in walls:
            assert pair(m, b, ei) > 0
            assert is_effective(m, ei)
            assert cohomology_dims(m, ei).h0 == 1


def test_contracted_root_negatives_are_not_effective():
    m = model("L_JK7")
    for v in ((0, -1, 0, 0), (0, 0, -1, 0), (0, 0, 0, -1)):
        assert not is_effective(m, v)


def test_restriction_estimate_type():
    est = RestrictionEstimate(1, 2)
    assert not est.exact and est.value is None
    est = RestrictionEstimate(2, 2)
    assert est.exact and est.value == 2


def test_h0_restricted_trigonal_plane_case():
    m = model("L_T7")
    est = h0_restricted(m, (1, -3), m.H)
    assert est.exact and est.value == 1


def test_h0_restricted_jk_values():
    m = model("L_JK7")
    est = h0_restricted(m, (1, 0, 0, 0), m.H)
    assert est.exact and est.value == 2
    m = model("L_JK8")
    est = h0_restricted(m, vsub(m.H, vscale(4, (1, 0, 0))), m.H)
    assert est.exact and est.value == 1
    m = model("L_JK9")
    est = h0_restricted(m, vsub(m.H, vscale(5, (1, 0, 0))), m.H)
    assert est.exact and est.value == 1
    m = model("L_JK10")
    est = h0_restricted(m, vsub(m.H, vscale(6, (1, 0))), m.H)
    assert est.exact and est.value == 1


def test_h0_restricted_interval_sanity():
    # both exact-sequence routes must cut down to a consistent interval,
    # and the degree-3 pencil route must agree wherever it applies
    m = model("L_T9")
    for v in degree_box(m, 2, 20):
        if not is_effective(m, v):
            continue
        est = h0_restricted(m, v, m.H)
        assert 0 <= est.lower <= est.upper


def test_h0_restricted_preconditions():
    m = model("L_T7")
    with pytest.raises(ValueError):
        h0_restricted(m, (0, 1), (0, 1))     # curve class of square 0
    with pytest.raises(ValueError):
        h0_restricted(m, (0, 1), (-1, 0))    # curve class not effective
