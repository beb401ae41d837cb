"""Exact-arithmetic toolkit for lonely runner instances.

Decides whether integer speed vectors admit a time at which every
runner keeps distance 1/(k+1) from the start, using exact rational
arithmetic throughout: an interval-sweep oracle, the runner polyhedron
and its planar integer-point cell, integer sufficient-condition rules, a dyadic
grid search, and a census sweep over all speed subsets of {1..N}.
"""

from .classify import (
    ClassificationReport,
    classify,
    evaluate_rules,
    rule_slow_fast,
    rule_thm1,
    rule_thm2,
)
from .dyadic import DyadicWitness, dyadic_denominator, dyadic_exponent, find_dyadic_time
from .enumeration import (
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
from .exact_arith import Rational, format_rational, frac, mod_int, parse_rational
from .model import SpeedVector, gcd_of, new_speed_vector, normalize
from .oracle import (
    SuitabilitySet,
    TimeInterval,
    earliest_suitable_time,
    half_period_witness,
    is_instance,
    is_suitable,
    lattice_witness_from_time,
    reflect_time,
    runner_intervals,
    scaled_suitable_set,
    suitable_set,
)
from .polyhedron import (
    HalfPlane,
    LatticePoint2,
    LemmaWidths,
    QGeometry,
    QLandmarks,
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

__version__ = "0.1.0"

__all__ = [
    "ClassificationReport",
    "CSV_FIELDS",
    "DyadicWitness",
    "EnumerationSummary",
    "HalfPlane",
    "LatticePoint2",
    "LemmaWidths",
    "QGeometry",
    "QLandmarks",
    "Rational",
    "SpeedVector",
    "SuitabilitySet",
    "TimeInterval",
    "VectorRecord",
    "classify",
    "contains",
    "coprime_count_moebius",
    "dyadic_denominator",
    "dyadic_exponent",
    "earliest_suitable_time",
    "evaluate_rules",
    "export",
    "find_dyadic_time",
    "format_rational",
    "frac",
    "gcd_of",
    "half_period_witness",
    "integer_point_in_q",
    "is_instance",
    "is_suitable",
    "iter_vector_records",
    "lattice_witness_from_time",
    "lemma_widths",
    "lift_to_p",
    "merge_summaries",
    "mod_int",
    "new_speed_vector",
    "normalize",
    "p1_interval",
    "parse_rational",
    "q_geometry",
    "q_halfplanes",
    "reflect_time",
    "rule_slow_fast",
    "rule_thm1",
    "rule_thm2",
    "runner_intervals",
    "scaled_suitable_set",
    "shard_bounds",
    "suitable_set",
    "summary_from_json",
    "support_bounds",
    "sweep",
    "translate_invariance_check",
    "width",
]
