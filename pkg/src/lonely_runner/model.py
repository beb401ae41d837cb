"""Speed vectors: validated tuples of distinct positive integer speeds.

A speed vector is stored sorted in strictly decreasing order, so
``speeds[0]`` is the fastest runner and ``speeds[-1]`` the slowest.
Ties are rejected: two runners with equal speeds keep a constant gap,
so duplicates would silently change the problem being decided.
:func:`normalize` additionally collapses duplicates and divides out the
common factor, which yields the canonical representative of the
scale-invariance class (speeds c*n and n have the same suitable times
up to the substitution t -> t/c).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = ["SpeedVector", "new_speed_vector", "normalize", "gcd_of"]


@dataclass(frozen=True)
class SpeedVector:
    """Distinct positive integer speeds in strictly decreasing order."""

    speeds: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.speeds) == 0:
            raise ValueError("speed vector must not be empty")
        for s in self.speeds:
            if s < 1:
                raise ValueError(f"speeds must be positive integers, got {s}")
        for a, b in zip(self.speeds, self.speeds[1:]):
            if a == b:
                raise ValueError(f"duplicate speed {a}")
            if a < b:
                raise ValueError("speeds must be strictly decreasing")

    @property
    def k(self) -> int:
        """Number of runners besides the stationary one."""
        return len(self.speeds)

    def __len__(self) -> int:
        return len(self.speeds)

    def __iter__(self) -> Iterator[int]:
        return iter(self.speeds)

    def __getitem__(self, index: int) -> int:
        return self.speeds[index]

    def __str__(self) -> str:
        return "(" + ",".join(str(s) for s in self.speeds) + ")"


def new_speed_vector(values: Iterable[int]) -> SpeedVector:
    """Sort descending and validate.

    Accepts speeds in any order; rejects empty input, non-positive
    entries, and duplicates with distinct messages.
    """
    return SpeedVector(tuple(sorted(values, reverse=True)))


def normalize(values: Iterable[int]) -> SpeedVector:
    """Canonical representative: positive entries, deduped, gcd divided out.

    Non-positive entries are dropped; at least one positive value must
    remain.  The result always has gcd 1.
    """
    kept = sorted({v for v in values if v >= 1}, reverse=True)
    if not kept:
        raise ValueError("normalize needs at least one positive value")
    g = math.gcd(*kept)
    return SpeedVector(tuple(v // g for v in kept))


def gcd_of(n: SpeedVector) -> int:
    """gcd of all speeds; 1 means the vector is coprime."""
    return math.gcd(*n.speeds)
