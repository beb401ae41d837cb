"""
Suitable times for a speed vector, end to end
=============================================

A time t is suitable for speeds n_1 > ... > n_k when every fractional
position frac(n_i * t) lies in [1/(k+1), k/(k+1)]; a vector admitting
such a time is an instance.  This walkthrough computes everything
exactly for (4, 3, 2).
"""

from fractions import Fraction

from lonely_runner import (
    earliest_suitable_time,
    half_period_witness,
    is_suitable,
    lattice_witness_from_time,
    new_speed_vector,
    reflect_time,
    runner_intervals,
    suitable_set,
)

n = new_speed_vector([2, 3, 4])  # any order goes in, storage is descending
print(f"vector {n} with k = {n.k} runners")

# Each runner alone is clear of the start on `speed` arcs per period.
for speed in n:
    arcs = runner_intervals(speed, n.k)
    print(f"  speed {speed}: clear on " + " ".join(f"[{iv.lo}, {iv.hi}]" for iv in arcs))

# The suitable set is the exact intersection of those arc systems.
times = suitable_set(n)
print("suitable set:", " ".join(f"[{iv.lo}, {iv.hi}]" for iv in times.intervals))
print("total suitable length per period:", times.total_length())

# The earliest suitable time doubles as the canonical witness.
t = earliest_suitable_time(n)
print("earliest suitable time:", t)
print("definitional check agrees:", is_suitable(n, t))

# Reflection t -> 1 - t preserves suitability, so a witness always
# exists in the first half period.
print("reflected witness", reflect_time(t), "suitable:", is_suitable(n, reflect_time(t)))
print("half-period witness:", half_period_witness(n))

# Rounding the runner positions down at a suitable time gives an
# integer point of the runner polyhedron (see demo 02).
print("lattice witness at t:", lattice_witness_from_time(n, t))

# Suitability can be queried at any exact rational time.
for probe in (Fraction(1, 10), Fraction(1, 8), Fraction(1, 2), Fraction(13, 16)):
    print(f"  t = {probe}: {'suitable' if is_suitable(n, probe) else 'not suitable'}")
