import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ideals, rationals
from mmibs.algebra import MonomialIdeal, minimalize
from mmibs.arrangement import face_samples
from mmibs.errors import DimensionMismatch, InvalidArgument, UnsupportedInput
from mmibs.mmi import (
    Wall,
    candidate_walls,
    is_jumping_point,
    jump_epsilon,
    jumping_numbers,
    mixed_multiplier_ideal,
    ray_jumping_numbers,
    region_report,
    walls_through,
)
from mmibs.newton import ResolutionData, resolution_data

Q = Fraction
X2 = [minimalize([(2,)])]
X_XY = [minimalize([(1, 0)]), minimalize([(1, 1)])]
X_Y = [minimalize([(1, 0)]), minimalize([(0, 1)])]


def rd_of(ideals_):
    return resolution_data(ideals_)


def walls(ideals_, box):
    return [(w.coeffs, w.rhs) for w in candidate_walls(rd_of(ideals_), box)]


def test_mmi_examples():
    assert mixed_multiplier_ideal(rd_of(X2), [Q(1, 2)]).generators == ((1,),)
    assert mixed_multiplier_ideal(rd_of(X2), [Q(1, 4)]).is_unit
    rd = rd_of([minimalize([(1, 0), (0, 1)])])
    for lam in (Q(1, 10), Q(1, 2), Q(99, 100)):
        assert mixed_multiplier_ideal(rd, [lam]).is_unit
    assert mixed_multiplier_ideal(rd_of(X_XY), [Q(1, 2), Q(1, 2)]).generators == ((1, 0),)


def test_mmi_rejects_bad_lambda():
    rd = rd_of(X_XY)
    with pytest.raises(InvalidArgument):
        mixed_multiplier_ideal(rd, [Q(-1, 2), 0])
    with pytest.raises(DimensionMismatch):
        mixed_multiplier_ideal(rd, [Q(1, 2)])


def test_jumping_point_examples():
    assert is_jumping_point(rd_of(X2), [Q(1, 2)])
    assert not is_jumping_point(rd_of(X2), [Q(1, 3)])
    assert is_jumping_point(rd_of(X_XY), [Q(1, 2), Q(1, 2)])
    assert not is_jumping_point(rd_of(X_XY), [0, 0])


def test_candidate_walls_examples():
    assert walls(X2, 2) == [((2,), 1), ((2,), 2), ((2,), 3), ((2,), 4)]
    assert sorted(walls(X_Y, 1)) == [((0, 1), 1), ((1, 0), 1)]
    assert sorted(walls(X_XY, 1)) == [((0, 1), 1), ((1, 1), 1), ((1, 1), 2)]
    with pytest.raises(InvalidArgument):
        candidate_walls(rd_of(X2), 0)


def test_region_report_examples():
    rep = region_report(rd_of(X2), [Q(1, 2)], 1)
    assert rep.constancy_sample and all(Q(1, 2) <= p[0] < 1 for p in rep.constancy_sample)
    assert rep.region_sample and all(p[0] < 1 for p in rep.region_sample)
    assert [w.rhs for w in rep.walls_active] == [1]

    # J(0) is the unit ideal, so its region is exactly its constancy region
    rep = region_report(rd_of(X_XY), [0, 0], 1)
    assert rep.ideal_at_base.is_unit
    assert rep.region_sample == rep.constancy_sample
    assert (Q(1, 2), Q(1, 4)) in rep.region_sample

    rd = rd_of(X_XY)
    lam = (Q(3, 4), Q(1, 2))
    rep = region_report(rd, lam, 1)
    assert rep.walls_active == ()
    # J = (x) on 1 <= z1 + z2 < 2, z2 < 1: the wall z1 + z2 = 1 belongs to the closed side
    for p in rep.constancy_sample:
        assert 1 <= p[0] + p[1] < 2 and p[1] < 1
    assert any(1 < p[0] + p[1] for p in rep.constancy_sample)
    base = rep.ideal_at_base
    for p in rep.constancy_sample:
        assert mixed_multiplier_ideal(rd, p) == base
    for p in rep.region_sample:
        assert mixed_multiplier_ideal(rd, p) >= base
    for p in rep.outside_sample:
        assert not mixed_multiplier_ideal(rd, p) >= base


def test_region_report_dimension_limit():
    ideals_ = [minimalize([(1, 0)])] * 4
    with pytest.raises(UnsupportedInput):
        region_report(rd_of(ideals_), [Q(1, 2)] * 4, 1)


def test_ray_examples():
    assert ray_jumping_numbers(rd_of(X2), X2, (1,), 1) == [Q(1, 2), 1]
    assert ray_jumping_numbers(rd_of(X_Y), X_Y, (1, 1), 1) == [1]
    assert ray_jumping_numbers(rd_of(X_XY), X_XY, (1, 1), 1) == [Q(1, 2), 1]
    assert jumping_numbers(rd_of(X2), 1) == [Q(1, 2), 1]
    with pytest.raises(InvalidArgument):
        ray_jumping_numbers(rd_of(X_Y), X_Y, (1, 0), 1)


def test_ray_off_diagonal_uses_orthant_drop():
    # mu = 1/2 on alpha = (1, 2) is a jumping number of x*y^2 although lowering z1 alone changes nothing
    assert ray_jumping_numbers(rd_of(X_Y), X_Y, (1, 2), 1) == [Q(1, 2), 1]
    assert is_jumping_point(rd_of(X_Y), [Q(1, 2), 1])


def test_resolution_mode_without_rays():
    rd = ResolutionData(1, (), ((1,),), (1,), (False,))
    assert [(w.coeffs, w.rhs) for w in candidate_walls(rd, 3)] == [((1,), 2), ((1,), 3)]
    with pytest.raises(UnsupportedInput):
        mixed_multiplier_ideal(rd, [1])


lam2 = st.tuples(rationals, rationals)


@settings(max_examples=60, deadline=None)
@given(ideals(2), ideals(2), lam2, lam2)
def test_monotone(I, J, a, b):
    rd = rd_of([I, J])
    lo = tuple(min(x, y) for x, y in zip(a, b))
    hi = tuple(max(x, y) for x, y in zip(a, b))
    assert mixed_multiplier_ideal(rd, lo) >= mixed_multiplier_ideal(rd, hi)


@settings(max_examples=40, deadline=None)
@given(ideals(2), ideals(2), lam2)
def test_jumping_points_lie_on_walls(I, J, lam):
    rd = rd_of([I, J])
    if is_jumping_point(rd, lam):
        assert walls_through(rd, lam)


@settings(max_examples=40, deadline=None)
@given(ideals(2, max_gens=3), ideals(2, max_gens=3), lam2, st.lists(st.tuples(st.integers(1, 5), st.integers(1, 5)), min_size=1, max_size=4))
def test_single_probe_decides_the_jump(I, J, lam, scalings):
    """Every point strictly below lam, close enough, has the same ideal as the probe."""
    rd = rd_of([I, J])
    if not any(lam):
        return
    direction = tuple(int(x > 0) for x in lam)
    eps = jump_epsilon(rd, lam, direction)
    probe = mixed_multiplier_ideal(rd, tuple(x - eps * d for x, d in zip(lam, direction)))
    for s in scalings:
        lower = tuple(x - eps * d * Q(c, 5) for x, d, c in zip(lam, direction, s))
        assert mixed_multiplier_ideal(rd, lower) == probe


@settings(max_examples=40, deadline=None)
@given(ideals(2), ideals(2), st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), max_size=3))
def test_generator_independence(I, J, padding):
    extra = [tuple(a + b for a, b in zip(g, p)) for g, p in zip(I.generators, padding)]
    padded = MonomialIdeal(2, tuple(sorted(set(I.generators) | set(extra))))
    lam = (Q(2, 3), Q(3, 4))
    assert mixed_multiplier_ideal(rd_of([padded, J]), lam) == mixed_multiplier_ideal(rd_of([I, J]), lam)


@settings(max_examples=20, deadline=None)
@given(ideals(2, max_gens=3), ideals(2, max_gens=3))
def test_constant_on_open_cells(I, J):
    rd = rd_of([I, J])
    ws = candidate_walls(rd, 1)
    faces = face_samples([w.hyperplane() for w in ws], 2, 1, density=2)
    for signs, pts in faces.items():
        if 0 in signs:
            continue
        ideals_ = {mixed_multiplier_ideal(rd, p) for p in pts}
        assert len(pts) >= 2
        assert len(ideals_) == 1


def test_wall_ordering():
    assert Wall((1, 1), 1, 3) == Wall((1, 1), 1, 0)
    assert Wall((0, 1), 1) < Wall((1, 1), 1)
