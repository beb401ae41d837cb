import itertools
import math
from fractions import Fraction

import pytest

from helpers import brute_integer_points_in_region, descending_subsets
from lonely_runner.model import SpeedVector, new_speed_vector
from lonely_runner.polyhedron import (
    HalfPlane,
    LatticePoint2,
    contains,
    integer_point_in_q,
    lemma_widths,
    lift_to_p,
    p1_interval,
    q_geometry,
    q_halfplanes,
    support_bounds,
    translate_invariance_check,
    width,
)

F = Fraction

REMARK_VECTOR = new_speed_vector([17, 16, 7, 6, 5, 4, 2])


def test_contains_frozen_examples():
    assert contains(new_speed_vector([4, 3, 2]), (0, 0, 0))
    assert not contains(new_speed_vector([5, 1]), (0, 0))
    assert contains(new_speed_vector([2, 1]), (0, 0))


def test_contains_dimension_mismatch():
    with pytest.raises(ValueError, match="dimension"):
        contains(new_speed_vector([4, 3, 2]), (0, 0))


@pytest.mark.parametrize("speeds", [(4, 3, 2), (9, 7, 2), (5, 4, 3, 2, 1)])
def test_contains_invariant_along_speed_direction(speeds):
    n = SpeedVector(speeds)
    points = [(0,) * n.k, tuple(range(n.k)), (1,) * n.k]
    for x in points:
        verdict = contains(n, x)
        for c in (-2, 1, 5):
            shifted = tuple(F(xi) + c * si for xi, si in zip(x, n))
            assert contains(n, shifted) == verdict


def test_p1_interval_frozen():
    assert p1_interval(new_speed_vector([20, 14, 8, 6, 5, 4, 2])) == (F(3, 8), F(9, 8))
    assert p1_interval(new_speed_vector([2, 1])) == (F(0), F(1))
    lo, hi = p1_interval(new_speed_vector([20, 14, 8, 6, 5, 4, 2]))
    assert lo <= 1 <= hi


def test_p1_interval_needs_k2():
    with pytest.raises(ValueError, match="k >= 2"):
        p1_interval(new_speed_vector([3]))


def test_p1_interval_length_bound():
    # Length >= (k-1)/(k+1) whenever n_2 <= k * n_k.
    for speeds in descending_subsets(9, min_size=2):
        n = SpeedVector(speeds)
        k = n.k
        if n[1] > k * n[k - 1]:
            continue
        lo, hi = p1_interval(n)
        assert hi - lo >= F(k - 1, k + 1)


def test_q_halfplanes_needs_k3():
    with pytest.raises(ValueError, match="k >= 3"):
        q_halfplanes(new_speed_vector([2, 1]))


def test_q_halfplanes_frozen():
    hps = q_halfplanes(REMARK_VECTOR)
    assert [(h.a1, h.a2, h.b) for h in hps] == [
        (F(-1), F(0), F(-3, 16)),
        (F(1), F(0), F(2)),
        (F(0), F(-1), F(-1, 8)),
        (F(0), F(1), F(15, 8)),
        (F(-16), F(17), F(95, 8)),
        (F(16), F(-17), F(103, 8)),
    ]


def test_q_geometry_vertices_frozen():
    geom = q_geometry(REMARK_VECTOR)
    assert geom.vertices == (
        (F(3, 16), F(1, 8)),
        (F(15, 16), F(1, 8)),
        (F(2), F(9, 8)),
        (F(2), F(15, 8)),
        (F(5, 4), F(15, 8)),
        (F(3, 16), F(7, 8)),
    )


def test_q_landmarks_frozen():
    lm = q_geometry(REMARK_VECTOR).landmarks
    assert lm.alpha == F(9, 8)
    assert lm.beta == F(49, 136)
    assert lm.gamma == F(223, 136)
    assert lm.delta == F(7, 8)
    assert lm.zeta == F(9, 8)
    assert lm.kappa == F(19, 16)


@pytest.mark.parametrize("speeds", [(17, 16, 7, 6, 5, 4, 2), (10, 4, 3, 1), (9, 8, 7), (12, 11, 5, 3)])
def test_landmark_relations_to_bounds(speeds):
    # alpha and kappa sit one unit above the lower bounds; delta and
    # zeta sit (k-1)/(k+1) inside the x2 bounds.  Computed along two
    # separate code paths, so agreement is informative.
    n = SpeedVector(speeds)
    k = n.k
    hps = q_halfplanes(n)
    lo1, hi2, lo2 = -hps[0].b, hps[3].b, -hps[2].b
    lm = q_geometry(n).landmarks
    assert lm.alpha == lo2 + 1
    assert lm.kappa == lo1 + 1
    assert lm.delta == lo2 + F(k - 1, k + 1)
    assert lm.zeta == hi2 - F(k - 1, k + 1)


@pytest.mark.parametrize("speeds", sorted(descending_subsets(8, min_size=3)))
def test_q_vertices_are_valid(speeds):
    n = SpeedVector(speeds)
    geom = q_geometry(n)
    verts = geom.vertices
    assert len(set(verts)) == len(verts)
    for x1, x2 in verts:
        assert all(h.holds(x1, x2) for h in geom.halfplanes)
        assert sum(h.tight(x1, x2) for h in geom.halfplanes) >= 2
    # Counterclockwise convex position: no clockwise turn anywhere.
    m = len(verts)
    if m >= 3:
        for i in range(m):
            ax, ay = verts[i]
            bx, by = verts[(i + 1) % m]
            cx, cy = verts[(i + 2) % m]
            assert (bx - ax) * (cy - ay) - (by - ay) * (cx - ax) >= 0


def test_width_of_a_point_is_zero():
    point = (
        HalfPlane(F(1), F(0), F(2)),
        HalfPlane(F(-1), F(0), F(-2)),
        HalfPlane(F(0), F(1), F(3)),
        HalfPlane(F(0), F(-1), F(-3)),
    )
    assert width(point, (1, 0)) == 0
    assert width(point, (3, 5)) == 0


def test_width_empty_and_unbounded_errors():
    empty = (HalfPlane(F(1), F(0), F(0)), HalfPlane(F(-1), F(0), F(-1)))
    with pytest.raises(ValueError, match="empty"):
        width(empty, (1, 0))
    half_strip = (HalfPlane(F(1), F(0), F(1)), HalfPlane(F(0), F(1), F(1)), HalfPlane(F(0), F(-1), F(0)))
    with pytest.raises(ValueError, match="unbounded"):
        width(half_strip, (1, 0))
    assert support_bounds(half_strip, (1, 0)) == (None, F(1))
    assert width(half_strip, (0, 1)) == 1


@pytest.mark.parametrize("speeds", [(17, 16, 7, 6, 5, 4, 2), (9, 8, 7), (12, 9, 7, 5), (11, 10, 9, 8, 2)])
def test_width_agrees_with_vertex_extremes(speeds):
    geom = q_geometry(SpeedVector(speeds))
    for d in [(1, 0), (0, 1), (2, 3), (-1, 5)]:
        values = [d[0] * x1 + d[1] * x2 for x1, x2 in geom.vertices]
        assert width(geom, d) == max(values) - min(values)


def test_lemma_widths_frozen():
    w = lemma_widths(REMARK_VECTOR)
    assert (w.wq_e1, w.wq_e2, w.wq2_e2, w.wq5_e2) == (F(29, 16), F(7, 4), F(3, 4), F(87, 68))
    w = lemma_widths(new_speed_vector([10, 4, 3, 1]))
    assert (w.wq_e1, w.wq_e2, w.wq2_e2, w.wq5_e2) == (F(19, 15), F(13, 15), None, F(41, 75))
    w = lemma_widths(new_speed_vector([100, 99, 98, 1]))
    assert (w.wq_e1, w.wq_e2, w.wq2_e2, w.wq5_e2) == (None, None, None, None)


def test_lemma_widths_needs_k3():
    with pytest.raises(ValueError, match="k >= 3"):
        lemma_widths(new_speed_vector([2, 1]))


def test_lemma_suite_small_sweep():
    # Hypothesis-gated width bounds on a bounded family; acceptance
    # covers the larger range.
    checked = 0
    for speeds in descending_subsets(9, min_size=3):
        n = SpeedVector(speeds)
        k = n.k
        n1, n2, n3, nk = n[0], n[1], n[2], n[k - 1]
        if n2 * (k * nk - n3) < (k + 1) * n3 * nk:
            continue
        checked += 1
        w = lemma_widths(n)
        assert w.wq_e1 is not None and w.wq_e1 >= 1
        assert w.wq_e2 is not None and w.wq_e2 >= 1
        assert w.wq2_e2 is not None and w.wq2_e2 >= F(k - 1, k + 1)
        if k >= 4 and 2 * n1 > (k - 1) * n2:
            assert w.wq5_e2 is not None and w.wq5_e2 > 1
    assert checked > 0


def test_integer_point_frozen():
    assert integer_point_in_q(REMARK_VECTOR) == LatticePoint2(1, 1)
    assert integer_point_in_q(new_speed_vector([4, 3, 2])) == LatticePoint2(0, 0)
    assert integer_point_in_q(new_speed_vector([100, 99, 98, 1])) is None


@pytest.mark.parametrize("speeds", sorted(descending_subsets(8, min_size=3)))
def test_integer_point_matches_brute_scan(speeds):
    n = SpeedVector(speeds)
    geom = q_geometry(n)
    found = integer_point_in_q(n)
    if not geom.vertices:
        assert found is None
        return
    x1_lo = math.ceil(min(v[0] for v in geom.vertices))
    x1_hi = math.floor(max(v[0] for v in geom.vertices))
    x2_lo = math.ceil(min(v[1] for v in geom.vertices))
    x2_hi = math.floor(max(v[1] for v in geom.vertices))
    hits = brute_integer_points_in_region(
        geom.halfplanes, range(x1_lo, x1_hi + 1), range(x2_lo, x2_hi + 1)
    )
    if not hits:
        assert found is None
    else:
        best = min(hits, key=lambda p: (p[1], p[0]))
        assert found == LatticePoint2(*best)


def test_lift_frozen_examples():
    assert lift_to_p(new_speed_vector([20, 14, 8, 6, 5, 4, 2]), 1, 1) == (1, 0, 0, 0, 0, 0, 0)
    assert lift_to_p(new_speed_vector([4, 3, 2]), (0, 0), 2) == (0, 0, 0)
    p = integer_point_in_q(REMARK_VECTOR)
    lifted = lift_to_p(REMARK_VECTOR, p, 2)
    assert lifted == (1, 1, 0, 0, 0, 0, 0)
    assert contains(REMARK_VECTOR, lifted)


def test_lift_identity_when_m_equals_k():
    assert lift_to_p(new_speed_vector([2, 1]), (0, 0), 2) == (0, 0)


def test_lift_domain_errors():
    n = new_speed_vector([20, 14, 8, 6, 5, 4, 2])
    with pytest.raises(ValueError, match="m must be 1 or 2"):
        lift_to_p(n, 1, 3)
    with pytest.raises(ValueError, match="exceeds k"):
        lift_to_p(new_speed_vector([3]), (0, 0), 2)
    with pytest.raises(ValueError, match="dimension"):
        lift_to_p(n, (1, 2), 1)
    with pytest.raises(ValueError, match="lift needs"):
        lift_to_p(new_speed_vector([100, 99, 98, 1]), (24, 24), 2)
    with pytest.raises(ValueError, match="outside"):
        lift_to_p(n, 5, 1)


@pytest.mark.parametrize("speeds", sorted(descending_subsets(8, min_size=3)))
def test_lift_soundness_from_q(speeds):
    # Any integer point of the planar cell zero-pads into P(n) when
    # n_3 <= k * n_k; lift_to_p re-checks membership internally and
    # raises on disagreement, so the call itself is the assertion.
    n = SpeedVector(speeds)
    if n[2] > n.k * n[n.k - 1]:
        return
    p = integer_point_in_q(n)
    if p is not None:
        lifted = lift_to_p(n, p, 2)
        assert contains(n, lifted)


@pytest.mark.parametrize("speeds", sorted(descending_subsets(7, min_size=2)))
def test_lift_soundness_from_p1(speeds):
    n = SpeedVector(speeds)
    if n[1] > n.k * n[n.k - 1]:
        return
    lo, hi = p1_interval(n)
    c = math.ceil(lo)
    if c > math.floor(hi):
        return
    assert contains(n, lift_to_p(n, c, 1))


def test_translate_invariance_frozen_examples():
    assert translate_invariance_check(new_speed_vector([2, 1]), (1, 1), 2)
    assert translate_invariance_check(new_speed_vector([3, 2, 1]), (0, 1, 0), 2)
    assert translate_invariance_check(new_speed_vector([4, 3, 2]), (-1, 0, 2), 2)


def test_translate_invariance_domain_errors():
    with pytest.raises(ValueError, match="k <= 4"):
        translate_invariance_check(new_speed_vector([5, 4, 3, 2, 1]), (0,) * 5, 1)
    with pytest.raises(ValueError, match="too large"):
        translate_invariance_check(new_speed_vector([4, 3, 2, 1]), (0, 0, 0, 0), 30)
    with pytest.raises(ValueError, match="dimension"):
        translate_invariance_check(new_speed_vector([2, 1]), (1,), 2)
    with pytest.raises(ValueError, match="box"):
        translate_invariance_check(new_speed_vector([2, 1]), (1, 1), -1)
