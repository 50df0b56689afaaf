"""Endomorphisms of small graphs: counting, cores, and minimum motion."""

from __future__ import annotations

from endobreak import (
    count_automorphisms,
    count_endomorphisms,
    endomorphism_motion,
    enumerate_endomorphisms,
    is_core,
    make_complete,
    make_cycle,
    make_path,
)

# %% A 4-cycle folds onto any of its edges, so it has many more
# endomorphisms than automorphisms.
c4 = make_cycle(4)
print("|End(C4)| =", count_endomorphisms(c4), " |Aut(C4)| =", count_automorphisms(c4))
print("first few:", list(enumerate_endomorphisms(c4, limit=5)))

# %% Odd cycles and complete graphs are cores: every endomorphism is a symmetry.
for g, name in [(make_cycle(5), "C5"), (make_complete(4), "K4"), (make_cycle(6), "C6")]:
    print(f"{name}: core={is_core(g)}")

# %% Minimum motion over nontrivial endomorphisms. Bipartite graphs can fold
# a single pendant-like vertex; odd cycles have to move almost everything.
for g, name in [(c4, "C4"), (make_cycle(5), "C5"), (make_path(6), "P6"), (make_complete(6), "K6")]:
    m = endomorphism_motion(g)
    print(f"m_e({name}) = {m.value}  witness {m.witness}")

# %% Branch-and-bound handles long cycles without enumerating End.
big = make_cycle(100, max_order=None)
m = endomorphism_motion(big)
print("m_e(C100) =", m.value)
