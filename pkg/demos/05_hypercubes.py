"""Exploration: endomorphism distinguishing numbers of small hypercubes.

Nothing here is asserted; the numbers are printed for inspection.
"""

from __future__ import annotations

import time

from endobreak import distinguishing_number, endo_distinguishing_number, make_hypercube
from endobreak.endo import count_automorphisms, count_endomorphisms, endomorphism_motion

for k in (1, 2, 3):
    q = make_hypercube(k)
    t0 = time.perf_counter()
    e = endo_distinguishing_number(q)
    a = distinguishing_number(q)
    dt = time.perf_counter() - t0
    print(
        f"Q{k}: |End|={count_endomorphisms(q)} |Aut|={count_automorphisms(q)} "
        f"m_e={endomorphism_motion(q).value} D={a.value} D_e={e.value} ({dt:.2f}s)"
    )
    print("   witness", e.witness)

# Q4 has too many endomorphisms to list cheaply, but the searches stay fast.
q4 = make_hypercube(4)
t0 = time.perf_counter()
print(
    f"Q4: m_e={endomorphism_motion(q4).value} D={distinguishing_number(q4).value} "
    f"D_e={endo_distinguishing_number(q4).value} ({time.perf_counter() - t0:.2f}s)"
)
