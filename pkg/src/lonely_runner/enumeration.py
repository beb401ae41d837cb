"""Census sweep over all speed subsets of {1..N}.

Bitmask i (1 <= i < 2^N) encodes the subset whose bit j-1 means speed
j; decoding a mask yields the descending speed tuple.  The sweep
partitions the mask range into contiguous shards, counts coprimality
and the rule triple for each vector, optionally runs the exact oracle
or the dyadic grid search, and merges the shard summaries fieldwise.
The merge is associative and commutative, so the result does not
depend on the shard count; shards may also be mapped onto worker
processes.

The number of coprime subsets has a closed form by Mobius inversion
over the common divisor (subsets of {1..N} with gcd divisible by d are
in bijection with subsets of {1..N/d}), which is what
:func:`coprime_count_moebius` computes; the sweep's counted value must
agree with it exactly.
"""

from __future__ import annotations

import csv
import json
import math
import multiprocessing
import os
import time
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import reduce
from typing import IO, Iterable, Iterator

from . import dyadic, oracle
from .classify import evaluate_rules
from .exact_arith import format_rational
from .model import SpeedVector

__all__ = [
    "EnumerationSummary",
    "VectorRecord",
    "CSV_FIELDS",
    "coprime_count_moebius",
    "shard_bounds",
    "merge_summaries",
    "sweep",
    "iter_vector_records",
    "export",
    "summary_from_json",
]

_MAX_SWEEP = 32
_MAX_MOEBIUS = 62  # 2^62 subsets still fit comfortably in a machine word

CSV_FIELDS = (
    "speeds",
    "k",
    "coprime",
    "thm1",
    "thm2",
    "slow_fast",
    "any_rule",
    "is_instance",
    "earliest_time",
    "dyadic_m",
)


def _mobius_upto(limit: int) -> list[int]:
    """Mobius function mu(1..limit) by a linear sieve."""
    mu = [0] * (limit + 1)
    mu[1] = 1
    primes: list[int] = []
    composite = [False] * (limit + 1)
    for i in range(2, limit + 1):
        if not composite[i]:
            primes.append(i)
            mu[i] = -1
        for p in primes:
            if i * p > limit:
                break
            composite[i * p] = True
            if i % p == 0:
                mu[i * p] = 0
                break
            mu[i * p] = -mu[i]
    return mu


def coprime_count_moebius(max_speed: int) -> int:
    """Number of nonempty subsets of {1..max_speed} with gcd 1.

    Closed form sum_d mu(d) (2^floor(max_speed/d) - 1); no enumeration.
    """
    if not 1 <= max_speed <= _MAX_MOEBIUS:
        raise ValueError(f"max_speed must be in [1, {_MAX_MOEBIUS}], got {max_speed}")
    mu = _mobius_upto(max_speed)
    return sum(mu[d] * ((1 << (max_speed // d)) - 1) for d in range(1, max_speed + 1))


@dataclass(frozen=True)
class EnumerationSummary:
    """Aggregate counts of one sweep.

    ``elapsed`` is wall time in milliseconds and is excluded from
    equality so that summaries over the same data compare equal no
    matter how long they took.
    """

    max_speed: int
    total_vectors: int
    coprime_vectors: int
    thm1_count: int
    thm2_count: int
    slow_fast_count: int
    any_rule_count: int
    oracle_instance_count: int | None
    dyadic_verified_count: int | None
    elapsed: int = field(compare=False, default=0)

    def to_json_obj(self, include_elapsed: bool = True) -> dict:
        obj = {
            "max_speed": self.max_speed,
            "total_vectors": self.total_vectors,
            "coprime_vectors": self.coprime_vectors,
            "thm1_count": self.thm1_count,
            "thm2_count": self.thm2_count,
            "slow_fast_count": self.slow_fast_count,
            "any_rule_count": self.any_rule_count,
            "oracle_instance_count": self.oracle_instance_count,
            "dyadic_verified_count": self.dyadic_verified_count,
        }
        if include_elapsed:
            obj["elapsed"] = self.elapsed
        return obj


@dataclass(frozen=True)
class VectorRecord:
    """Per-vector row of the census export."""

    speeds: tuple[int, ...]
    k: int
    coprime: bool
    thm1: bool
    thm2: bool
    slow_fast: bool
    any_rule: bool
    is_instance: bool | None
    earliest_time: Fraction | None
    dyadic_m: int | None

    def to_csv_row(self) -> list[str]:
        def bit(x: bool) -> str:
            return "1" if x else "0"

        return [
            ";".join(str(s) for s in self.speeds),
            str(self.k),
            bit(self.coprime),
            bit(self.thm1),
            bit(self.thm2),
            bit(self.slow_fast),
            bit(self.any_rule),
            "" if self.is_instance is None else bit(self.is_instance),
            "" if self.earliest_time is None else format_rational(self.earliest_time),
            "" if self.dyadic_m is None else str(self.dyadic_m),
        ]

    def to_json_obj(self) -> dict:
        return {
            "speeds": list(self.speeds),
            "k": self.k,
            "coprime": self.coprime,
            "thm1": self.thm1,
            "thm2": self.thm2,
            "slow_fast": self.slow_fast,
            "any_rule": self.any_rule,
            "is_instance": self.is_instance,
            "earliest_time": None if self.earliest_time is None else format_rational(self.earliest_time),
            "dyadic_m": self.dyadic_m,
        }


def _decode(mask: int) -> tuple[int, ...]:
    """Descending speed tuple of a subset bitmask (bit j-1 <-> speed j)."""
    speeds = []
    while mask:
        low = mask & -mask
        speeds.append(low.bit_length())
        mask ^= low
    speeds.reverse()
    return tuple(speeds)


def shard_bounds(max_speed: int, shard_count: int) -> list[tuple[int, int]]:
    """Contiguous half-open mask ranges covering [1, 2^max_speed)."""
    if shard_count < 1:
        raise ValueError(f"shard_count must be >= 1, got {shard_count}")
    total = (1 << max_speed) - 1
    edges = [1 + (total * i) // shard_count for i in range(shard_count + 1)]
    return [(edges[i], edges[i + 1]) for i in range(shard_count)]


def _sweep_range(
    max_speed: int,
    lo: int,
    hi: int,
    require_coprime: bool,
    with_oracle: bool,
    with_dyadic: bool,
) -> EnumerationSummary:
    """Sweep the mask range [lo, hi) single-threaded."""
    total = 0
    coprime_ct = 0
    thm1_ct = thm2_ct = slow_ct = any_ct = 0
    oracle_ct = 0 if with_oracle else None
    dyadic_ct = 0 if with_dyadic else None
    gcd = math.gcd
    for mask in range(lo, hi):
        speeds = _decode(mask)
        total += 1
        coprime = gcd(*speeds) == 1
        if coprime:
            coprime_ct += 1
        elif require_coprime:
            continue
        thm1, thm2, slow_fast = evaluate_rules(speeds)
        if thm1:
            thm1_ct += 1
        if thm2:
            thm2_ct += 1
        if slow_fast:
            slow_ct += 1
        if thm1 or thm2 or slow_fast:
            any_ct += 1
        if with_oracle or with_dyadic:
            sv = SpeedVector(speeds)
            if with_oracle and oracle.is_instance(sv):
                oracle_ct += 1
            if with_dyadic and dyadic.find_dyadic_time(sv) is not None:
                dyadic_ct += 1
    return EnumerationSummary(
        max_speed=max_speed,
        total_vectors=total,
        coprime_vectors=coprime_ct,
        thm1_count=thm1_ct,
        thm2_count=thm2_ct,
        slow_fast_count=slow_ct,
        any_rule_count=any_ct,
        oracle_instance_count=oracle_ct,
        dyadic_verified_count=dyadic_ct,
    )


def merge_summaries(a: EnumerationSummary, b: EnumerationSummary) -> EnumerationSummary:
    """Fieldwise addition of two shard summaries over the same max_speed."""
    if a.max_speed != b.max_speed:
        raise ValueError("cannot merge summaries with different max_speed")

    def opt(x: int | None, y: int | None) -> int | None:
        if (x is None) != (y is None):
            raise ValueError("cannot merge summaries with different options")
        return None if x is None else x + y

    return EnumerationSummary(
        max_speed=a.max_speed,
        total_vectors=a.total_vectors + b.total_vectors,
        coprime_vectors=a.coprime_vectors + b.coprime_vectors,
        thm1_count=a.thm1_count + b.thm1_count,
        thm2_count=a.thm2_count + b.thm2_count,
        slow_fast_count=a.slow_fast_count + b.slow_fast_count,
        any_rule_count=a.any_rule_count + b.any_rule_count,
        oracle_instance_count=opt(a.oracle_instance_count, b.oracle_instance_count),
        dyadic_verified_count=opt(a.dyadic_verified_count, b.dyadic_verified_count),
        elapsed=a.elapsed + b.elapsed,
    )


def sweep(
    max_speed: int,
    *,
    require_coprime: bool = False,
    with_oracle: bool = False,
    with_dyadic: bool = False,
    shard_count: int = 1,
    processes: int = 1,
) -> EnumerationSummary:
    """Enumerate all nonempty subsets of {1..max_speed} and aggregate.

    ``require_coprime`` restricts classification (and the optional
    oracle and dyadic passes) to coprime vectors; total and coprime
    counts always cover the whole range.  The result is identical for
    every shard_count; with processes > 1 the shards are mapped onto a
    worker pool.
    """
    if not 1 <= max_speed <= _MAX_SWEEP:
        raise ValueError(f"max_speed must be in [1, {_MAX_SWEEP}], got {max_speed}")
    if processes < 1:
        raise ValueError(f"processes must be >= 1, got {processes}")
    start = time.perf_counter()
    bounds = shard_bounds(max_speed, shard_count)
    args = [(max_speed, lo, hi, require_coprime, with_oracle, with_dyadic) for lo, hi in bounds]
    if processes > 1 and len(args) > 1:
        with multiprocessing.Pool(min(processes, len(args))) as pool:
            parts = pool.starmap(_sweep_range, args)
    else:
        parts = [_sweep_range(*a) for a in args]
    summary = reduce(merge_summaries, parts)
    elapsed = int((time.perf_counter() - start) * 1000)
    return replace(summary, elapsed=elapsed)


def iter_vector_records(
    max_speed: int,
    *,
    require_coprime: bool = False,
    with_oracle: bool = False,
    with_dyadic: bool = False,
) -> Iterator[VectorRecord]:
    """Stream one VectorRecord per enumerated vector, masks ascending."""
    if not 1 <= max_speed <= _MAX_SWEEP:
        raise ValueError(f"max_speed must be in [1, {_MAX_SWEEP}], got {max_speed}")
    for mask in range(1, 1 << max_speed):
        speeds = _decode(mask)
        coprime = math.gcd(*speeds) == 1
        if require_coprime and not coprime:
            continue
        thm1, thm2, slow_fast = evaluate_rules(speeds)
        is_inst: bool | None = None
        earliest: Fraction | None = None
        dyadic_m: int | None = None
        if with_oracle or with_dyadic:
            sv = SpeedVector(speeds)
            if with_oracle:
                earliest = oracle.earliest_suitable_time(sv)
                is_inst = earliest is not None
            if with_dyadic:
                witness = dyadic.find_dyadic_time(sv)
                dyadic_m = None if witness is None else witness.m
        yield VectorRecord(
            speeds=speeds,
            k=len(speeds),
            coprime=coprime,
            thm1=thm1,
            thm2=thm2,
            slow_fast=slow_fast,
            any_rule=thm1 or thm2 or slow_fast,
            is_instance=is_inst,
            earliest_time=earliest,
            dyadic_m=dyadic_m,
        )


def _export_to(handle: IO[str], data: EnumerationSummary | Iterable[VectorRecord], fmt: str) -> None:
    if isinstance(data, EnumerationSummary):
        if fmt == "json":
            json.dump(data.to_json_obj(), handle)
            handle.write("\n")
        else:
            writer = csv.writer(handle)
            obj = data.to_json_obj()
            writer.writerow(obj.keys())
            writer.writerow("" if v is None else v for v in obj.values())
    else:
        if fmt == "json":
            handle.write("[")
            first = True
            for record in data:
                if not first:
                    handle.write(",\n")
                json.dump(record.to_json_obj(), handle)
                first = False
            handle.write("]\n")
        else:
            writer = csv.writer(handle)
            writer.writerow(CSV_FIELDS)
            for record in data:
                writer.writerow(record.to_csv_row())


def export(
    data: EnumerationSummary | Iterable[VectorRecord],
    fmt: str,
    destination: str | os.PathLike | IO[str],
) -> None:
    """Write a summary or a record stream to a file or file-like as csv/json."""
    if fmt not in ("csv", "json"):
        raise ValueError(f"format must be 'csv' or 'json', got {fmt!r}")
    if isinstance(destination, (str, os.PathLike)):
        try:
            with open(destination, "w", newline="") as handle:
                _export_to(handle, data, fmt)
        except OSError as exc:
            raise OSError(f"cannot write {destination}: {exc}") from exc
    else:
        _export_to(destination, data, fmt)


def summary_from_json(source: str | dict) -> EnumerationSummary:
    """Rebuild an EnumerationSummary from its JSON text or object."""
    obj = json.loads(source) if isinstance(source, str) else source
    return EnumerationSummary(
        max_speed=obj["max_speed"],
        total_vectors=obj["total_vectors"],
        coprime_vectors=obj["coprime_vectors"],
        thm1_count=obj["thm1_count"],
        thm2_count=obj["thm2_count"],
        slow_fast_count=obj["slow_fast_count"],
        any_rule_count=obj["any_rule_count"],
        oracle_instance_count=obj["oracle_instance_count"],
        dyadic_verified_count=obj["dyadic_verified_count"],
        elapsed=obj.get("elapsed", 0),
    )
