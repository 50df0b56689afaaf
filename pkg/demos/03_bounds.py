"""Counting bounds for distinguishing numbers, checked in exact arithmetic."""

from __future__ import annotations

from endobreak.bounds import (
    monte_carlo_distinguishing,
    motion_lemma_check,
    orbit_norm_lemma_check,
    orbit_norm_spectrum,
    russell_sundaram_check,
)
from endobreak.graph import make_cycle, make_hypercube

# %% The orbit-norm spectrum of C5: rotations form one orbit, reflections
# fix a vertex and swap two pairs.
c5 = make_cycle(5)
print("spectrum:", dict(orbit_norm_spectrum(c5)))

# %% Each check reports both sides of the inequality exactly.
for d in (2, 3, 4):
    for check in (motion_lemma_check, orbit_norm_lemma_check, russell_sundaram_check):
        r = check(c5, d)
        print(f"d={d} {r.bound_name:14} {str(r.lhs):>8} vs {str(r.rhs):<6} -> {r.implied_conclusion}")

# %% The orbit-norm sum is sharper than the motion bound on Q3.
q3 = make_hypercube(3)
for d in (2, 3):
    print("Q3", d, motion_lemma_check(q3, d).holds, orbit_norm_lemma_check(q3, d).lhs)

# %% Random colorings: fraction that is automorphism-distinguishing.
est = monte_carlo_distinguishing(make_cycle(6), 2, 20_000, seed=11)
print(f"C6, d=2: {est.point_estimate:.4f} +- {est.standard_error:.4f} (exact 12/64 = {12/64:.4f})")
