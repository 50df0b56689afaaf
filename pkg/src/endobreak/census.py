"""Per-graph invariant profiles for census runs."""

from __future__ import annotations

from typing import Any, Collection

from . import endo
from .breaking import distinguishing_number, endo_distinguishing_number
from .graph import Graph
from .graph6 import write_graph6

DEFAULT_MAX_ENDOS = 10**7

SLOW_FIELDS = (
    "endo_count",
    "aut_count",
    "is_core",
    "endo_motion",
    "auto_motion",
    "endo_orbit_norm",
    "dist_number",
    "endo_dist_number",
)


def invariant_profile(
    g: Graph,
    max_endos: int | None = DEFAULT_MAX_ENDOS,
    skip: Collection[str] = (),
) -> dict[str, Any]:
    """Invariant record of ``g`` with a fixed key order.

    Big counts are decimal strings; a capped endomorphism count reads
    ``"truncated@<limit>"``. Fields named in ``skip`` are ``null``.
    """
    unknown = set(skip) - set(SLOW_FIELDS)
    if unknown:
        raise ValueError(f"cannot skip {sorted(unknown)}; choose from {SLOW_FIELDS}")
    want = lambda name: name not in skip  # noqa: E731

    rec: dict[str, Any] = {
        "graph6": write_graph6(g),
        "order": g.order,
        "edge_count": g.edge_count,
    }

    count = endo.count_endomorphisms(g, max_endos) if want("endo_count") else None
    aut = endo.count_automorphisms(g) if want("aut_count") else None
    rec["endo_count"] = None if count is None else str(count)
    rec["aut_count"] = None if aut is None else str(aut)

    if count is not None and not count.truncated and aut is not None:
        core = count.value == aut
    else:
        core = endo.is_core(g) if want("is_core") else None
    rec["is_core"] = core if want("is_core") else None
    if count is not None and not count.truncated:
        rec["is_rigid"] = count.value == 1
    else:
        rec["is_rigid"] = endo.is_rigid(g)

    motion = endo.endomorphism_motion(g) if want("endo_motion") else None
    rec["endo_motion"] = None if motion is None else motion.value
    amotion = endo.automorphism_motion(g) if want("auto_motion") else None
    rec["auto_motion"] = None if amotion is None else amotion.value

    norm = None
    if want("endo_orbit_norm") and not (count is not None and count.truncated):
        try:
            norm = endo.endomorphism_orbit_norm(g, max_endos)
        except endo.EnumerationTruncated:
            norm = None
    rec["endo_orbit_norm"] = norm

    for key, fn in (
        ("dist_number", distinguishing_number),
        ("endo_dist_number", endo_distinguishing_number),
    ):
        witness_key = key.replace("number", "witness")
        if not want(key):
            rec[key] = rec[witness_key] = None
        elif g.order == 0:
            rec[key], rec[witness_key] = 1, []
        else:
            res = fn(g)
            rec[key], rec[witness_key] = res.value, list(res.witness)
    return rec
