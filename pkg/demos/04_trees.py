"""Endomorphisms of trees: folds, distance-2 identifications, fixed sets."""

from __future__ import annotations

from endobreak.constructions import (
    check_dist2_identification,
    check_fixed_points_connected,
    pendant_fold,
    tree_lemma_census,
)
from endobreak.endo import enumerate_endomorphisms, is_automorphism
from endobreak.graph import make_star, pendant_vertices, random_tree

# %% Folding a pendant vertex onto a vertex at distance 2 is an endomorphism.
t = random_tree(10, 5)
leaf = pendant_vertices(t)[0]
f = pendant_fold(t, leaf)
print("tree edges:", list(t.edges()))
print("fold of", leaf, "->", f)
print(check_dist2_identification(t, f), "fixed set connected:", check_fixed_points_connected(t, f))

# %% Every endomorphism of a small star, checked one by one.
s = make_star(4)
for g in enumerate_endomorphisms(s, limit=8):
    print(g, "auto" if is_automorphism(s, g) else "", check_dist2_identification(s, g).status)

# %% The vectorized census covers all of End(T) at once.
for seed in range(3):
    t = random_tree(9, seed)
    c = tree_lemma_census(t)
    print(f"seed {seed}: |End|={c.endomorphisms} |Aut|={c.automorphisms} clean={c.clean}")
