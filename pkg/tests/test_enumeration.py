import io
import json
from functools import reduce

import pytest

from helpers import coprime_count_brute, descending_subsets
from lonely_runner.classify import evaluate_rules
from lonely_runner.enumeration import (
    CSV_FIELDS,
    EnumerationSummary,
    VectorRecord,
    coprime_count_moebius,
    export,
    iter_vector_records,
    merge_summaries,
    shard_bounds,
    summary_from_json,
    sweep,
)

MOEBIUS_PREFIX = [1, 2, 5, 11, 26, 53, 116, 236, 488, 983, 2006, 4016]


def test_moebius_count_frozen_prefix():
    assert [coprime_count_moebius(i) for i in range(1, 13)] == MOEBIUS_PREFIX


def test_moebius_count_desk_scale():
    assert coprime_count_moebius(32) == 4294900694


@pytest.mark.parametrize("max_speed", range(1, 11))
def test_moebius_count_matches_brute(max_speed):
    assert coprime_count_moebius(max_speed) == coprime_count_brute(max_speed)


def test_moebius_count_domain():
    with pytest.raises(ValueError):
        coprime_count_moebius(0)
    with pytest.raises(ValueError):
        coprime_count_moebius(63)


@pytest.mark.parametrize("max_speed,shards", [(4, 1), (4, 3), (8, 5), (8, 64), (10, 7)])
def test_shard_bounds_partition(max_speed, shards):
    bounds = shard_bounds(max_speed, shards)
    assert len(bounds) == shards
    assert bounds[0][0] == 1
    assert bounds[-1][1] == 1 << max_speed
    for (_, hi), (lo, _) in zip(bounds, bounds[1:]):
        assert hi == lo


def test_shard_bounds_domain():
    with pytest.raises(ValueError):
        shard_bounds(4, 0)


def test_sweep_frozen_small():
    assert sweep(4).to_json_obj(include_elapsed=False) == {
        "max_speed": 4,
        "total_vectors": 15,
        "coprime_vectors": 11,
        "thm1_count": 0,
        "thm2_count": 8,
        "slow_fast_count": 11,
        "any_rule_count": 12,
        "oracle_instance_count": None,
        "dyadic_verified_count": None,
    }
    assert sweep(6).to_json_obj(include_elapsed=False) == {
        "max_speed": 6,
        "total_vectors": 63,
        "coprime_vectors": 53,
        "thm1_count": 1,
        "thm2_count": 38,
        "slow_fast_count": 35,
        "any_rule_count": 45,
        "oracle_instance_count": None,
        "dyadic_verified_count": None,
    }


def test_sweep_matches_independent_recount():
    summary = sweep(7)
    thm1 = thm2 = slow = any_rule = 0
    for speeds in descending_subsets(7):
        a, b, c = evaluate_rules(speeds)
        thm1 += a
        thm2 += b
        slow += c
        any_rule += a or b or c
    assert summary.total_vectors == 127
    assert summary.coprime_vectors == coprime_count_brute(7)
    assert (summary.thm1_count, summary.thm2_count, summary.slow_fast_count) == (thm1, thm2, slow)
    assert summary.any_rule_count == any_rule


def test_sweep_domain_checks():
    with pytest.raises(ValueError):
        sweep(0)
    with pytest.raises(ValueError):
        sweep(33)
    with pytest.raises(ValueError):
        sweep(4, processes=0)


@pytest.mark.parametrize("shards", [1, 3, 7, 64])
def test_sweep_shard_count_invariance(shards):
    assert sweep(10, shard_count=shards) == sweep(10)


def test_sweep_with_processes_matches_serial():
    assert sweep(9, shard_count=4, processes=2) == sweep(9)


def test_sweep_require_coprime_counts():
    for max_speed in (6, 9, 12):
        summary = sweep(max_speed, require_coprime=True)
        assert summary.coprime_vectors == coprime_count_moebius(max_speed)
        assert summary.total_vectors == (1 << max_speed) - 1
        assert summary.any_rule_count <= summary.coprime_vectors


def test_sweep_oracle_and_dyadic_counts():
    # Every vector at this scale is an instance and every instance here
    # has a dyadic witness, so the optional counts equal the number of
    # classified vectors.
    summary = sweep(6, with_oracle=True, with_dyadic=True)
    assert summary.oracle_instance_count == 63
    assert summary.dyadic_verified_count == 63
    summary = sweep(6, require_coprime=True, with_oracle=True, with_dyadic=True)
    assert summary.oracle_instance_count == 53
    assert summary.dyadic_verified_count == 53


def test_merge_summaries_properties():
    parts = [sweep_part for sweep_part in _shard_parts(8, 5)]
    merged = reduce(merge_summaries, parts)
    assert merged == sweep(8)
    # Merge order is irrelevant.
    assert reduce(merge_summaries, reversed(parts)) == merged


def _shard_parts(max_speed, shards):
    from lonely_runner.enumeration import _sweep_range

    for lo, hi in shard_bounds(max_speed, shards):
        yield _sweep_range(max_speed, lo, hi, False, False, False)


def test_merge_summaries_rejects_mismatches():
    a = sweep(4)
    b = sweep(5)
    with pytest.raises(ValueError, match="max_speed"):
        merge_summaries(a, b)
    c = sweep(4, with_oracle=True)
    with pytest.raises(ValueError, match="options"):
        merge_summaries(a, c)


def test_summary_equality_ignores_elapsed():
    a = sweep(5)
    b = EnumerationSummary(**{**a.to_json_obj(include_elapsed=False), "elapsed": a.elapsed + 1000})
    assert a == b


def test_iter_vector_records_order_and_fields():
    records = list(iter_vector_records(3))
    assert [r.speeds for r in records] == [(1,), (2,), (2, 1), (3,), (3, 1), (3, 2), (3, 2, 1)]
    assert [r.coprime for r in records] == [True, False, True, False, True, True, True]
    assert all(r.is_instance is None and r.earliest_time is None and r.dyadic_m is None for r in records)
    coprime_only = list(iter_vector_records(3, require_coprime=True))
    assert [r.speeds for r in coprime_only] == [(1,), (2, 1), (3, 1), (3, 2), (3, 2, 1)]


def test_iter_vector_records_with_oracle_and_dyadic():
    records = list(iter_vector_records(4, with_oracle=True, with_dyadic=True))
    assert all(r.is_instance for r in records)
    assert all(r.dyadic_m is not None for r in records)
    by_speeds = {r.speeds: r for r in records}
    assert str(by_speeds[(4, 3, 2)].earliest_time) == "1/8"
    assert by_speeds[(4, 3, 2)].dyadic_m == 16


def test_vector_record_serialization():
    record = VectorRecord(
        speeds=(4, 3, 2),
        k=3,
        coprime=True,
        thm1=False,
        thm2=True,
        slow_fast=True,
        any_rule=True,
        is_instance=None,
        earliest_time=None,
        dyadic_m=None,
    )
    assert record.to_csv_row() == ["4;3;2", "3", "1", "0", "1", "1", "1", "", "", ""]
    assert record.to_json_obj()["speeds"] == [4, 3, 2]
    assert record.to_json_obj()["earliest_time"] is None


def test_export_summary_json_roundtrip(tmp_path):
    summary = sweep(6)
    path = tmp_path / "summary.json"
    export(summary, "json", path)
    assert summary_from_json(path.read_text()) == summary


def test_export_summary_csv(tmp_path):
    path = tmp_path / "summary.csv"
    export(sweep(4), "csv", path)
    lines = path.read_text().strip().splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("max_speed,total_vectors,")
    assert lines[1].startswith("4,15,11,")


def test_export_records_csv(tmp_path):
    path = tmp_path / "records.csv"
    export(iter_vector_records(4), "csv", path)
    lines = path.read_text().strip().splitlines()
    assert lines[0] == ",".join(CSV_FIELDS)
    assert len(lines) == 1 + 15


def test_export_records_json_stream():
    buffer = io.StringIO()
    export(iter_vector_records(3), "json", buffer)
    data = json.loads(buffer.getvalue())
    assert len(data) == 7
    assert data[0]["speeds"] == [1]


def test_export_rejects_bad_format():
    with pytest.raises(ValueError, match="format"):
        export(sweep(3), "xml", io.StringIO())


def test_export_wraps_os_errors(tmp_path):
    with pytest.raises(OSError, match="cannot write"):
        export(sweep(3), "json", tmp_path / "missing-dir" / "out.json")
