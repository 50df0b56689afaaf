"""JSON Schemas (draft 2020-12) for every object the command line emits."""

_count = {"type": ["string", "null"], "pattern": r"^([0-9]+|truncated@[0-9]+)$"}
_small = {"type": ["integer", "null"], "minimum": 0}
_coloring = {"type": ["array", "null"], "items": {"type": "integer", "minimum": 0}}

PROFILE = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "InvariantProfile",
    "type": "object",
    "properties": {
        "graph6": {"type": "string"},
        "order": {"type": "integer", "minimum": 0},
        "edge_count": {"type": "integer", "minimum": 0},
        "endo_count": _count,
        "aut_count": _count,
        "is_core": {"type": ["boolean", "null"]},
        "is_rigid": {"type": "boolean"},
        "endo_motion": _small,
        "auto_motion": _small,
        "endo_orbit_norm": _small,
        "dist_number": _small,
        "dist_witness": _coloring,
        "endo_dist_number": _small,
        "endo_dist_witness": _coloring,
    },
    "required": [
        "graph6", "order", "edge_count", "endo_count", "aut_count", "is_core",
        "is_rigid", "endo_motion", "auto_motion", "endo_orbit_norm",
        "dist_number", "dist_witness", "endo_dist_number", "endo_dist_witness",
    ],
    "additionalProperties": False,
}

LINE_ERROR = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "LineError",
    "type": "object",
    "properties": {
        "line": {"type": "integer", "minimum": 1},
        "error": {"type": "string"},
        "kind": {"type": "string"},
    },
    "required": ["line", "error", "kind"],
    "additionalProperties": False,
}

VERDICT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "ColoringVerdict",
    "type": "object",
    "properties": {
        "mode": {"enum": ["endo", "auto"]},
        "distinguishing": {"type": "boolean"},
        "counterexample": {
            "type": ["array", "null"],
            "items": {"type": "integer", "minimum": 0},
        },
    },
    "required": ["mode", "distinguishing", "counterexample"],
    "additionalProperties": False,
}

_exact = {"type": ["string", "null"], "pattern": r"^-?[0-9]+(/[0-9]+)?$"}

BOUND = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "BoundReport",
    "type": "object",
    "properties": {
        "bound": {"enum": ["motion", "orbitnorm", "rs"]},
        "d": {"type": "integer", "minimum": 2},
        "holds": {"type": ["boolean", "null"]},
        "lhs": _exact,
        "rhs": _exact,
        "implied_conclusion": {"type": "string"},
        "vacuous": {"type": "boolean"},
    },
    "required": ["bound", "d", "holds", "lhs", "rhs", "implied_conclusion", "vacuous"],
    "additionalProperties": False,
}

MONTE_CARLO = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "MonteCarloEstimate",
    "type": "object",
    "properties": {
        "successes": {"type": "integer", "minimum": 0},
        "trials": {"type": "integer", "minimum": 1},
        "point_estimate": {"type": "number", "minimum": 0, "maximum": 1},
        "standard_error": {"type": "number", "minimum": 0},
        "seed": {"type": "integer"},
        "d": {"type": "integer", "minimum": 2},
    },
    "required": ["successes", "trials", "point_estimate", "standard_error", "seed", "d"],
    "additionalProperties": False,
}
