"""Brute-force reference computations shared by the test suite.

Everything here is deliberately dumb and definitional so that the
library's faster algorithms have something independent to disagree
with.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterator

from lonely_runner.model import SpeedVector
from lonely_runner.oracle import is_suitable

__all__ = [
    "descending_subsets",
    "coprime_count_brute",
    "grid_denominator",
    "suitability_probe_points",
    "brute_dyadic_m",
    "brute_integer_points_in_region",
]


def descending_subsets(max_speed: int, min_size: int = 1) -> Iterator[tuple[int, ...]]:
    """All nonempty subsets of {1..max_speed} as descending speed tuples."""
    values = range(max_speed, 0, -1)
    for size in range(min_size, max_speed + 1):
        yield from itertools.combinations(values, size)


def coprime_count_brute(max_speed: int) -> int:
    """Count coprime subsets by taking the gcd of every single subset."""
    return sum(1 for s in descending_subsets(max_speed) if math.gcd(*s) == 1)


def grid_denominator(n: SpeedVector) -> int:
    """Common denominator (k+1) * lcm(n) of all suitability endpoints."""
    return (n.k + 1) * math.lcm(*n.speeds)


def suitability_probe_points(n: SpeedVector) -> list[Fraction]:
    """Grid points j/D and all midpoints between them, D = (k+1)*lcm(n).

    Every endpoint of the suitable set lies on the grid {j/D}, so the
    set restricted to an open gap between adjacent grid points is
    either the whole gap or nothing.  Agreement with the definitional
    test on these 2D+1 probes therefore pins the set down exactly.
    """
    den = grid_denominator(n)
    points = []
    for j in range(den + 1):
        points.append(Fraction(j, den))
        if j < den:
            points.append(Fraction(2 * j + 1, 2 * den))
    return points


def brute_dyadic_m(n: SpeedVector, den: int, limit: int) -> int | None:
    """Literal ascending search for the minimal suitable grid numerator."""
    for m in range(1, limit + 1):
        if is_suitable(n, Fraction(m, den)):
            return m
    return None


def brute_integer_points_in_region(halfplanes, x1_range, x2_range) -> list[tuple[int, int]]:
    """All integer points of a half-plane region inside a search box."""
    hits = []
    for x2 in x2_range:
        for x1 in x1_range:
            if all(h.holds(Fraction(x1), Fraction(x2)) for h in halfplanes):
                hits.append((x1, x2))
    return hits
