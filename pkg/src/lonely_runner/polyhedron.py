"""The runner polyhedron and its low-dimensional windows.

For a speed vector n_1 > ... > n_k, the runner polyhedron P(n) is the
set of x in R^k with

    (n_i - k n_j)/(k+1)  <=  n_j x_i - n_i x_j  <=  (k n_i - n_j)/(k+1)

for all 1 <= i < j <= k.  A vector is a lonely runner instance exactly
when P(n) contains an integer point, which is what makes the geometry
worth computing: wide windows force integer points.

P(n) is invariant along the direction n itself (adding c*n to x leaves
every n_j x_i - n_i x_j unchanged), so P(n) is never bounded and its
true coordinate projections are unbounded too.  Instead of projections
we work with bounded low-dimensional windows into P(n): a closed
interval for one coordinate, and for two coordinates the hexagonal
cell Q cut out by six half-planes (box bounds on x_1 and x_2 plus a
slant band on n_2 x_1 - n_1 x_2).  The windows are useful one way
round: any integer point found inside them zero-pads to an integer
point of P(n) whenever n_{m+1} <= k n_k, which is how instance
witnesses are produced here.  Everything is computed in exact rational
arithmetic: support bounds by Fourier-Motzkin elimination, vertices by
pairwise line intersection.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Sequence

from .model import SpeedVector

__all__ = [
    "HalfPlane",
    "QLandmarks",
    "QGeometry",
    "LemmaWidths",
    "LatticePoint2",
    "contains",
    "p1_interval",
    "q_halfplanes",
    "q_geometry",
    "support_bounds",
    "width",
    "lemma_widths",
    "integer_point_in_q",
    "lift_to_p",
    "translate_invariance_check",
]

_ZERO = Fraction(0)

# Cap on the number of lattice points translate_invariance_check may visit.
_BOX_POINT_CAP = 200_000


@dataclass(frozen=True)
class HalfPlane:
    """Constraint a1*x1 + a2*x2 <= b with exact rational coefficients."""

    a1: Fraction
    a2: Fraction
    b: Fraction

    def value(self, x1: Fraction, x2: Fraction) -> Fraction:
        return self.a1 * x1 + self.a2 * x2

    def holds(self, x1: Fraction, x2: Fraction) -> bool:
        return self.value(x1, x2) <= self.b

    def tight(self, x1: Fraction, x2: Fraction) -> bool:
        return self.value(x1, x2) == self.b


@dataclass(frozen=True)
class QLandmarks:
    """Distinguished x_2 levels (and one x_1 level, kappa) of Q.

    alpha is one unit above the bottom bound, so integer x_2 slices
    exist between them; beta and gamma bound the slab whose every x_2
    level still spans more than one unit of x_1 when the cell is
    wide; delta and zeta sit (k-1)/(k+1) inside the bottom and top
    bounds; kappa is one unit above the left x_1 bound.
    """

    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction
    zeta: Fraction
    kappa: Fraction


@dataclass(frozen=True)
class QGeometry:
    """The six half-planes of Q, its vertices in CCW order, and landmarks."""

    halfplanes: tuple[HalfPlane, ...]
    vertices: tuple[tuple[Fraction, Fraction], ...]
    landmarks: QLandmarks


@dataclass(frozen=True)
class LemmaWidths:
    """Closed-form widths of Q and two subregions; None when empty.

    wq2_e2 is the x_2 width of Q cut to x_2 >= alpha; wq5_e2 is the
    x_2 width of Q cut to beta <= x_2 <= gamma.  The closed forms match
    the true (vertex-derived) widths whenever the box bounds of Q are
    facets, which holds under n_2 (k/n_3 - 1/n_k) >= k + 1.
    """

    wq_e1: Fraction | None
    wq_e2: Fraction | None
    wq2_e2: Fraction | None
    wq5_e2: Fraction | None


@dataclass(frozen=True)
class LatticePoint2:
    """Integer point of the plane."""

    x1: int
    x2: int


def contains(n: SpeedVector, x: Sequence[Fraction | int]) -> bool:
    """Exact membership of x in the k-dimensional runner polyhedron P(n)."""
    if len(x) != n.k:
        raise ValueError(f"point has dimension {len(x)}, expected {n.k}")
    xs = tuple(Fraction(c) for c in x)
    k = n.k
    for i in range(k):
        for j in range(i + 1, k):
            g = n[j] * xs[i] - n[i] * xs[j]
            if not Fraction(n[i] - k * n[j], k + 1) <= g <= Fraction(k * n[i] - n[j], k + 1):
                return False
    return True


def p1_interval(n: SpeedVector) -> tuple[Fraction, Fraction]:
    """One-dimensional window into P(n) on the first coordinate, as (lo, hi).

    Any x1 in [lo, hi] extends to a point of P(n) by zero-padding when
    n_2 <= k * n_k (see lift_to_p).  Needs k >= 2.  The interval may be
    empty (lo > hi) for vectors with a very dominant n_1; callers must
    check.
    """
    k = n.k
    if k < 2:
        raise ValueError("p1_interval needs k >= 2")
    lo = Fraction(n[0], (k + 1) * n[k - 1]) - Fraction(k, k + 1)
    hi = Fraction(k * n[0], (k + 1) * n[1]) - Fraction(1, k + 1)
    return lo, hi


def _q_bounds(n: SpeedVector) -> tuple[Fraction, ...]:
    k = n.k
    n1, n2, n3, nk = n[0], n[1], n[2], n[k - 1]
    lo1 = Fraction(n1, (k + 1) * nk) - Fraction(k, k + 1)
    hi1 = Fraction(k * n1, (k + 1) * n3) - Fraction(1, k + 1)
    lo2 = Fraction(n2, (k + 1) * nk) - Fraction(k, k + 1)
    hi2 = Fraction(k * n2, (k + 1) * n3) - Fraction(1, k + 1)
    lo5 = Fraction(n1 - k * n2, k + 1)
    hi5 = Fraction(k * n1 - n2, k + 1)
    return lo1, hi1, lo2, hi2, lo5, hi5


def q_halfplanes(n: SpeedVector) -> tuple[HalfPlane, ...]:
    """The six half-planes cutting out Q, the planar window into P(n).

    Order: x1 lower, x1 upper, x2 lower, x2 upper, slant lower, slant
    upper, where the slant constraints bound n_2 x_1 - n_1 x_2.  Points
    of Q zero-pad into P(n) when n_3 <= k * n_k (see lift_to_p).  Needs
    k >= 3 (the bounds involve n_3).
    """
    if n.k < 3:
        raise ValueError("the 2D cell needs k >= 3")
    lo1, hi1, lo2, hi2, lo5, hi5 = _q_bounds(n)
    one = Fraction(1)
    n1 = Fraction(n[0])
    n2 = Fraction(n[1])
    return (
        HalfPlane(-one, _ZERO, -lo1),
        HalfPlane(one, _ZERO, hi1),
        HalfPlane(_ZERO, -one, -lo2),
        HalfPlane(_ZERO, one, hi2),
        HalfPlane(-n2, n1, -lo5),
        HalfPlane(n2, -n1, hi5),
    )


def _landmarks(n: SpeedVector) -> QLandmarks:
    k = n.k
    n1, n2, n3, nk = n[0], n[1], n[2], n[k - 1]
    alpha = Fraction(n2, (k + 1) * nk) + Fraction(1, k + 1)
    beta = Fraction(n2, (k + 1) * nk) + Fraction(2 * n2, (k + 1) * n1) - Fraction(k, k + 1)
    gamma = Fraction(k * n2, (k + 1) * n3) - Fraction(2 * n2, (k + 1) * n1) - Fraction(1, k + 1)
    delta = Fraction(n2 - nk, (k + 1) * nk)
    zeta = Fraction(k * (n2 - n3), (k + 1) * n3)
    kappa = Fraction(n1, (k + 1) * nk) + Fraction(1, k + 1)
    return QLandmarks(alpha, beta, gamma, delta, zeta, kappa)


def _vertices(hps: Sequence[HalfPlane]) -> tuple[tuple[Fraction, Fraction], ...]:
    """Feasible pairwise line intersections = extreme points, CCW order.

    A feasible intersection of two non-parallel constraint lines is
    always an extreme point: a constraint line through a relative
    interior point of the region or of one of its edges would exclude
    nearby feasible points unless it coincides with the edge line (and
    coinciding lines have determinant zero, so the pair is skipped).
    """
    points: set[tuple[Fraction, Fraction]] = set()
    m = len(hps)
    for i in range(m):
        for j in range(i + 1, m):
            a, b = hps[i], hps[j]
            det = a.a1 * b.a2 - a.a2 * b.a1
            if det == 0:
                continue
            x1 = (a.b * b.a2 - a.a2 * b.b) / det
            x2 = (a.a1 * b.b - a.b * b.a1) / det
            if all(h.holds(x1, x2) for h in hps):
                points.add((x1, x2))
    return _ccw_sorted(points)


def _ccw_sorted(points: Iterable[tuple[Fraction, Fraction]]) -> tuple[tuple[Fraction, Fraction], ...]:
    pts = list(points)
    if len(pts) <= 1:
        return tuple(pts)
    cx = sum(p[0] for p in pts) / len(pts)
    cy = sum(p[1] for p in pts) / len(pts)

    def half(p: tuple[Fraction, Fraction]) -> int:
        # 0 on the closed upper half starting at angle 0, 1 below.
        if p[1] > cy or (p[1] == cy and p[0] >= cx):
            return 0
        return 1

    def compare(p: tuple[Fraction, Fraction], q: tuple[Fraction, Fraction]) -> int:
        hp, hq = half(p), half(q)
        if hp != hq:
            return hp - hq
        cross = (p[0] - cx) * (q[1] - cy) - (p[1] - cy) * (q[0] - cx)
        if cross > 0:
            return -1
        if cross < 0:
            return 1
        return 0

    ordered = sorted(pts, key=cmp_to_key(compare))
    # Deterministic start: rotate the cycle to the lexicographically
    # smallest vertex.
    start = min(range(len(ordered)), key=lambda i: ordered[i])
    return tuple(ordered[start:] + ordered[:start])


def q_geometry(n: SpeedVector) -> QGeometry:
    """Half-planes, vertices, and landmark levels of Q for k >= 3."""
    hps = q_halfplanes(n)
    return QGeometry(hps, _vertices(hps), _landmarks(n))


def _project(
    hps: Sequence[HalfPlane], direction: tuple[Fraction, Fraction]
) -> tuple[bool, Fraction | None, Fraction | None]:
    """(feasible, lo, hi) of <direction, x> over the region; None = unbounded.

    Fourier-Motzkin elimination in rotated coordinates u = <d, x>,
    w = <d_perp, x>: each constraint becomes p*u + q*w <= r, the w
    variable is eliminated by pairing opposite-sign q rows, and the
    surviving one-variable rows give the exact projection interval.
    """
    d1, d2 = Fraction(direction[0]), Fraction(direction[1])
    if d1 == 0 and d2 == 0:
        raise ValueError("direction must be nonzero")
    norm = d1 * d1 + d2 * d2
    direct: list[tuple[Fraction, Fraction]] = []  # rows p*u <= r
    uppers: list[tuple[Fraction, Fraction, Fraction]] = []  # q > 0
    lowers: list[tuple[Fraction, Fraction, Fraction]] = []  # q < 0
    for hp in hps:
        p = hp.a1 * d1 + hp.a2 * d2
        q = hp.a2 * d1 - hp.a1 * d2
        r = hp.b * norm
        if q == 0:
            direct.append((p, r))
        elif q > 0:
            uppers.append((p, q, r))
        else:
            lowers.append((p, q, r))
    for pi, qi, ri in uppers:
        for pj, qj, rj in lowers:
            # (r_j - p_j u)/q_j <= (r_i - p_i u)/q_i, multiplied by q_i*q_j < 0
            direct.append((pj * qi - pi * qj, rj * qi - ri * qj))
    lo: Fraction | None = None
    hi: Fraction | None = None
    for p, r in direct:
        if p == 0:
            if r < 0:
                return False, None, None
        elif p > 0:
            bound = r / p
            if hi is None or bound < hi:
                hi = bound
        else:
            bound = r / p
            if lo is None or bound > lo:
                lo = bound
    if lo is not None and hi is not None and lo > hi:
        return False, None, None
    return True, lo, hi


def support_bounds(
    region: QGeometry | Sequence[HalfPlane], direction: tuple[Fraction | int, Fraction | int]
) -> tuple[Fraction | None, Fraction | None]:
    """Exact (min, max) of <direction, x> over the region; None = unbounded.

    Raises ValueError when the region is empty.
    """
    hps = region.halfplanes if isinstance(region, QGeometry) else tuple(region)
    feasible, lo, hi = _project(hps, (Fraction(direction[0]), Fraction(direction[1])))
    if not feasible:
        raise ValueError("empty region")
    return lo, hi


def width(
    region: QGeometry | Sequence[HalfPlane], direction: tuple[Fraction | int, Fraction | int]
) -> Fraction:
    """Width max <d, x> - min <d, x> of the region along a direction."""
    lo, hi = support_bounds(region, direction)
    if lo is None or hi is None:
        raise ValueError("region is unbounded along this direction")
    return hi - lo


def _feasible(hps: Sequence[HalfPlane]) -> bool:
    ok, _, _ = _project(hps, (Fraction(1), _ZERO))
    return ok


def lemma_widths(n: SpeedVector) -> LemmaWidths:
    """Closed-form widths of Q and of its two distinguished subregions.

    Subregion emptiness is decided exactly by feasibility of the
    extended half-plane system, not by the sign of the closed form.
    """
    hps = q_halfplanes(n)
    lm = _landmarks(n)
    k = n.k
    n1, n2, n3, nk = n[0], n[1], n[2], n[k - 1]
    spread = Fraction(k, n3) - Fraction(1, nk)
    if not _feasible(hps):
        return LemmaWidths(None, None, None, None)
    wq_e1 = Fraction(n1, k + 1) * spread + Fraction(k - 1, k + 1)
    wq_e2 = Fraction(n2, k + 1) * spread + Fraction(k - 1, k + 1)
    one = Fraction(1)
    above_alpha = hps + (HalfPlane(_ZERO, -one, -lm.alpha),)
    slab = hps + (HalfPlane(_ZERO, -one, -lm.beta), HalfPlane(_ZERO, one, lm.gamma))
    wq2_e2 = Fraction(n2, k + 1) * spread - Fraction(2, k + 1) if _feasible(above_alpha) else None
    wq5_e2 = lm.gamma - lm.beta if _feasible(slab) else None
    return LemmaWidths(wq_e1, wq_e2, wq2_e2, wq5_e2)


def integer_point_in_q(n: SpeedVector) -> LatticePoint2 | None:
    """Integer point of Q minimizing (x2, x1) lexicographically, or None.

    Scans integer x2 levels across the exact x2 support of Q; on each
    level the admissible x1 range is the box bound intersected with the
    slant band solved for x1.
    """
    hps = q_halfplanes(n)
    feasible, lo, hi = _project(hps, (_ZERO, Fraction(1)))
    if not feasible:
        return None
    assert lo is not None and hi is not None  # Q is always bounded
    lo1, hi1, _, _, lo5, hi5 = _q_bounds(n)
    n1, n2 = n[0], n[1]
    for z in range(math.ceil(lo), math.floor(hi) + 1):
        xlo = max(lo1, (lo5 + n1 * z) / n2)
        xhi = min(hi1, (hi5 + n1 * z) / n2)
        if xlo > xhi:
            continue
        c = math.ceil(xlo)
        if c <= math.floor(xhi):
            return LatticePoint2(c, z)
    return None


def lift_to_p(
    n: SpeedVector, p: LatticePoint2 | Sequence[int] | int, m: int
) -> tuple[int, ...]:
    """Zero-pad a point of the m-dimensional window into P(n).

    Valid for m in {1, 2} when n_{m+1} <= k * n_k (vacuous when m = k):
    the padded coordinates then satisfy every constraint involving
    them.  The membership of the result is checked exactly and a
    failure raises, since it would mean the geometry and the algebra
    disagree.
    """
    if m not in (1, 2):
        raise ValueError(f"m must be 1 or 2, got {m}")
    if m > n.k:
        raise ValueError(f"m = {m} exceeds k = {n.k}")
    if isinstance(p, LatticePoint2):
        coords: tuple[int, ...] = (p.x1, p.x2)
    elif isinstance(p, int):
        coords = (p,)
    else:
        coords = tuple(p)
    if len(coords) != m:
        raise ValueError(f"point has dimension {len(coords)}, expected m = {m}")
    k = n.k
    if m < k and n[m] > k * n[k - 1]:
        raise ValueError(f"lift needs n_{m + 1} <= k*n_k, got {n[m]} > {k * n[k - 1]}")
    if m == k:
        inside = contains(n, coords)
    elif m == 1:
        lo, hi = p1_interval(n)
        inside = lo <= coords[0] <= hi
    else:
        x1, x2 = Fraction(coords[0]), Fraction(coords[1])
        inside = all(h.holds(x1, x2) for h in q_halfplanes(n))
    if not inside:
        raise ValueError(f"point {coords} is outside the {m}-dimensional window")
    lifted = coords + (0,) * (k - m)
    if not contains(n, lifted):
        raise RuntimeError(f"zero-padding {coords} left P{n}")
    return lifted


def _contains_translated(n: SpeedVector, y: Sequence[int], v: Sequence[int]) -> bool:
    """Membership of y in the translated polyhedron P(n) + v.

    Evaluated against shifted bounds rather than by subtracting v from
    y, so the translation arithmetic gets exercised independently.
    """
    k = n.k
    for i in range(k):
        for j in range(i + 1, k):
            g = n[j] * y[i] - n[i] * y[j]
            shift = n[j] * v[i] - n[i] * v[j]
            if not (
                Fraction(n[i] - k * n[j], k + 1) + shift
                <= g
                <= Fraction(k * n[i] - n[j], k + 1) + shift
            ):
                return False
    return True


def translate_invariance_check(n: SpeedVector, v: Sequence[int], box: int) -> bool:
    """Lattice counts of P(n) in a box and of P(n)+v in the shifted box agree.

    True on every valid input (translation by an integer vector bijects
    the lattice); the value of running it is that it cross-checks the
    constraint arithmetic along two different code paths.  Limited to
    k <= 4 and small boxes.
    """
    if n.k > 4:
        raise ValueError("translate_invariance_check is limited to k <= 4")
    if box < 0:
        raise ValueError(f"box must be non-negative, got {box}")
    if len(v) != n.k:
        raise ValueError(f"translation has dimension {len(v)}, expected {n.k}")
    if (2 * box + 1) ** n.k > _BOX_POINT_CAP:
        raise ValueError(f"box of side {2 * box + 1} in dimension {n.k} is too large")
    rng = range(-box, box + 1)
    count_orig = sum(1 for x in itertools.product(rng, repeat=n.k) if contains(n, x))
    count_shifted = 0
    for x in itertools.product(rng, repeat=n.k):
        y = tuple(xi + vi for xi, vi in zip(x, v))
        count_shifted += _contains_translated(n, y, v)
    return count_orig == count_shifted
