"""Distinguishing colorings: breaking automorphisms versus endomorphisms."""

from __future__ import annotations

from endobreak import (
    distinguishing_number,
    endo_distinguishing_number,
    find_color_preserving_endo,
    is_auto_distinguishing,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_path,
)
from endobreak.constructions import even_cycle_coloring, path_coloring

# %% D counts colors needed to kill every nontrivial automorphism, D_e every
# nontrivial endomorphism. D_e can only be larger.
rows = [
    ("K4", make_complete(4)),
    ("C4", make_cycle(4)),
    ("C5", make_cycle(5)),
    ("C6", make_cycle(6)),
    ("P5", make_path(5)),
    ("K2,3", make_complete_bipartite(2, 3)),
    ("K3,3", make_complete_bipartite(3, 3)),
]
print(f"{'graph':6} {'D':>3} {'D_e':>4}  witness")
for name, g in rows:
    a, e = distinguishing_number(g), endo_distinguishing_number(g)
    print(f"{name:6} {a.value:>3} {e.value:>4}  {e.witness}")

# %% A 2-coloring that breaks all automorphisms of P4 can still be preserved
# by a fold.
colors = (0, 1, 0, 1)
print("P4 with", colors, "breaks the reversal:", is_auto_distinguishing(make_path(4), colors))
print("   but is preserved by", find_color_preserving_endo(make_path(4), colors))

# %% Explicit 2-colorings from the constructions module.
print("C8 coloring:", even_cycle_coloring(4))
print("P9 coloring:", path_coloring(9))
print("preserved by:", find_color_preserving_endo(make_path(9), path_coloring(9)))
