"""Dyadic time-grid search for suitable times.

The grid for a vector with largest speed n_1 has denominator
D = 2^e (k+1) n_1 where e is the smallest integer with 2^(e-1) >= n_1.
The search asks for the minimal numerator m >= 1 such that m/D is a
suitable time; the interesting open question is whether such an m
exists for every coprime instance, and this module provides the tool
to measure that at scale.

Implementation: instead of testing m = 1, 2, ... one by one, walk the
exact suitable set (whose endpoints are integers over (k+1) lcm(n))
and take the first grid numerator at or after each interval start.
That yields the same minimal m as the literal ascending loop, in time
proportional to the number of intervals.

Restricting to the lower half of the grid (m <= ceil(D/2)) never
changes the answer: t = 1 is never suitable, so a minimal hit with
m/D > 1/2 would reflect to the suitable time 1 - m/D < 1/2, and the
grid is symmetric (D - m is a grid numerator), contradicting
minimality.  The ``half_range`` flag exposes the restricted search for
measurement anyway.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import oracle
from .model import SpeedVector

__all__ = ["DyadicWitness", "dyadic_exponent", "dyadic_denominator", "find_dyadic_time"]


@dataclass(frozen=True)
class DyadicWitness:
    """Minimal grid numerator m with m/denominator suitable."""

    exponent: int
    denominator: int
    m: int
    time: Fraction


def dyadic_exponent(n: SpeedVector) -> int:
    """Smallest e with 2^(e-1) >= n_1."""
    return (n[0] - 1).bit_length() + 1


def dyadic_denominator(n: SpeedVector) -> int:
    """Grid denominator 2^e (k+1) n_1 with e = dyadic_exponent(n)."""
    return (1 << dyadic_exponent(n)) * (n.k + 1) * n[0]


def find_dyadic_time(n: SpeedVector, half_range: bool = False) -> DyadicWitness | None:
    """Minimal m in [1, D] with m/D suitable, or None when no grid time is.

    With ``half_range`` the search stops at ceil(D/2), which provably
    returns the same result.
    """
    exponent = dyadic_exponent(n)
    den = (1 << exponent) * (n.k + 1) * n[0]
    limit = (den + 1) // 2 if half_range else den
    scale, arcs = oracle.scaled_suitable_set(n)
    for lo, hi in arcs:
        # smallest m with m/den >= lo/scale
        m_lo = -((-lo * den) // scale)
        if m_lo < 1:
            m_lo = 1
        if m_lo > limit:
            break
        m_hi = (hi * den) // scale
        if m_hi > limit:
            m_hi = limit
        if m_lo <= m_hi:
            return DyadicWitness(exponent, den, m_lo, Fraction(m_lo, den))
    return None
