"""Sufficient-condition classifiers for lonely runner instances.

Three integer-arithmetic rules, each sound (a positive answer always
means the vector is an instance, confirmed against the exact oracle in
the test suite):

* ``rule_thm1``: for k >= 4, the condition n_2 (k/n_3 - 1/n_k) >= k+1
  (evaluated cross-multiplied, no division) makes the planar cell Q of
  the runner polyhedron wide enough in both axis directions to contain
  an integer point.
* ``rule_thm2``: for k >= 2, n_2 <= k n_k together with
  n_k <= n_1 mod ((k+1) n_k) <= k n_k puts an integer inside the 1D
  window interval, which zero-pads into the full polyhedron.
* ``rule_slow_fast``: n_1 <= k n_k, in which case t = k/((k+1) n_1) is
  suitable.  Unlike the other two this rule is exact for its witness:
  that particular time is suitable if and only if the condition holds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import oracle
from .exact_arith import format_rational
from .model import SpeedVector

__all__ = [
    "ClassificationReport",
    "evaluate_rules",
    "rule_thm1",
    "rule_thm2",
    "rule_slow_fast",
    "classify",
]


def evaluate_rules(speeds: Sequence[int]) -> tuple[bool, bool, bool]:
    """Rule triple (thm1, thm2, slow_fast) on a descending speed tuple.

    Integer-only fast path used by the enumeration sweep; the public
    rule_* functions wrap it for single vectors.  Rules whose shape
    requirements are not met (k too small) are simply False.
    """
    k = len(speeds)
    n1 = speeds[0]
    nk = speeds[-1]
    thm1 = False
    if k >= 4:
        n2, n3 = speeds[1], speeds[2]
        thm1 = n2 * (k * nk - n3) >= (k + 1) * n3 * nk
    thm2 = False
    if k >= 2:
        n2 = speeds[1]
        remainder = n1 % ((k + 1) * nk)
        thm2 = n2 <= k * nk and nk <= remainder <= k * nk
    slow_fast = n1 <= k * nk
    return thm1, thm2, slow_fast


def rule_thm1(n: SpeedVector) -> bool:
    """n_2 (k/n_3 - 1/n_k) >= k + 1 with k >= 4; False for smaller k."""
    return evaluate_rules(n.speeds)[0]


def rule_thm2(n: SpeedVector) -> bool:
    """n_2 <= k n_k and n_k <= n_1 mod ((k+1) n_k) <= k n_k; False at k = 1."""
    return evaluate_rules(n.speeds)[1]


def rule_slow_fast(n: SpeedVector) -> tuple[bool, Fraction | None]:
    """n_1 <= k n_k, with its witness time k/((k+1) n_1) when it holds."""
    ok = evaluate_rules(n.speeds)[2]
    if not ok:
        return False, None
    return True, Fraction(n.k, (n.k + 1) * n[0])


@dataclass(frozen=True)
class ClassificationReport:
    """Outcome of running all rules (and optionally the oracle) on one vector."""

    vector: SpeedVector
    thm1: bool
    thm2: bool
    slow_fast: bool
    any_rule: bool
    witness_time: Fraction | None
    witness_point: tuple[int, ...] | None
    oracle_verdict: bool | None

    def to_json_obj(self) -> dict:
        return {
            "vector": list(self.vector.speeds),
            "thm1": self.thm1,
            "thm2": self.thm2,
            "slow_fast": self.slow_fast,
            "any_rule": self.any_rule,
            "witness_time": None if self.witness_time is None else format_rational(self.witness_time),
            "witness_point": None if self.witness_point is None else list(self.witness_point),
            "oracle_verdict": self.oracle_verdict,
        }


def classify(n: SpeedVector, with_oracle: bool = False) -> ClassificationReport:
    """Run the three rules on n; optionally decide exactly with the oracle.

    The witness time is the slow_fast time when that rule fires (it is
    free), otherwise the earliest suitable time when the oracle is on.
    Any reported witness time is suitable and its floor-rounding is an
    integer point of the runner polyhedron.
    """
    thm1, thm2, slow_fast = evaluate_rules(n.speeds)
    any_rule = thm1 or thm2 or slow_fast
    witness_time: Fraction | None = None
    if slow_fast:
        witness_time = Fraction(n.k, (n.k + 1) * n[0])
    elif with_oracle:
        witness_time = oracle.earliest_suitable_time(n)
    witness_point = None
    if witness_time is not None:
        witness_point = oracle.lattice_witness_from_time(n, witness_time)
    oracle_verdict = oracle.is_instance(n) if with_oracle else None
    return ClassificationReport(
        vector=n,
        thm1=thm1,
        thm2=thm2,
        slow_fast=slow_fast,
        any_rule=any_rule,
        witness_time=witness_time,
        witness_point=witness_point,
        oracle_verdict=oracle_verdict,
    )
