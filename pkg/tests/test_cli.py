import io
import json
import os
import subprocess
import sys

import jsonschema
import pytest

from corpus import RIGID_8
from endobreak import schemas
from endobreak.cli import main
from endobreak.endo import find_isomorphism
from endobreak.graph import make_complete_bipartite, make_cycle, make_path
from endobreak.graph6 import parse_graph6, write_graph6

C5, C6 = write_graph6(make_cycle(5)), write_graph6(make_cycle(6))


def run(argv, stdin=""):
    out = io.StringIO()
    old = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        code = main(argv, out)
    finally:
        sys.stdin = old
    return code, out.getvalue()


def records(text):
    return [json.loads(line) for line in text.splitlines()]


def test_gen_families():
    code, out = run(["gen", "--family", "cycle", "--n", "6"])
    assert code == 0 and parse_graph6(out) == make_cycle(6)
    code, out = run(["gen", "--family", "bipartite", "--m", "2", "--n", "3"])
    assert parse_graph6(out) == make_complete_bipartite(2, 3)
    code, out = run(["gen", "--family", "hypercube", "--k", "3"])
    assert parse_graph6(out).order == 8
    code, out = run(["gen", "--family", "power", "--n", "3", "--k", "2"])
    assert parse_graph6(out).order == 9
    code, out = run(["gen", "--family", "power", "--base", write_graph6(make_path(3)), "--k", "2"])
    assert parse_graph6(out).edge_count == 12
    code, out = run(["gen", "--family", "tree", "--n", "9", "--seed", "4", "--count", "3"])
    assert len(out.splitlines()) == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["gen", "--family", "cycle", "--n", "2"],
        ["gen", "--family", "cycle"],
        ["gen", "--family", "cycle", "--n", "65"],
        ["gen", "--family", "nope", "--n", "3"],
        ["bound", "--graph", C5, "--lemma", "motion", "--d", "1"],
        ["check-coloring", "--graph", C6, "--colors", "1,0"],
        ["check-coloring", "--graph", C6, "--colors", "a,b"],
        ["mc", "--graph", C6, "--d", "2", "--trials", "5", "--seed", "1", "--bias", "0.9,0.3"],
        ["profile", "--skip", "bogus"],
    ],
)
def test_invocation_errors_exit_2(argv, capsys):
    code, out = run(argv)
    assert code == 2 and out == ""
    assert capsys.readouterr().err


def test_profile_examples():
    lines = "\n".join([write_graph6(make_cycle(4)), C5, write_graph6(make_path(2))])
    code, out = run(["profile", "--json"], lines)
    assert code == 0
    c4, c5, p2 = records(out)
    assert (c4["endo_count"], c4["endo_motion"], c4["endo_dist_number"]) == ("32", 1, 3)
    assert (c5["aut_count"], c5["is_core"], c5["dist_number"], c5["endo_dist_number"]) == ("10", True, 3, 3)
    assert (p2["endo_count"], p2["endo_dist_number"]) == ("2", 2)
    for rec in (c4, c5, p2):
        jsonschema.validate(rec, schemas.PROFILE)


def test_profile_key_order_is_stable():
    _, out = run(["profile"], C5)
    assert list(json.loads(out)) == list(schemas.PROFILE["properties"])


def test_profile_truncation_and_skip():
    _, out = run(["profile", "--max-endos", "5", "--skip", "dist_number,endo_dist_number"], C6)
    rec = json.loads(out)
    assert rec["endo_count"] == "truncated@5"
    assert rec["endo_orbit_norm"] is None and rec["dist_number"] is None
    assert rec["is_core"] is False
    jsonschema.validate(rec, schemas.PROFILE)


def test_profile_bad_line_reports_and_continues():
    code, out = run(["profile"], f"{C5}\n~~\n{C6}\n")
    assert code == 1
    a, err, b = records(out)
    assert a["graph6"] == C5 and b["graph6"] == C6
    assert err["line"] == 2 and err["kind"] == "Graph6HeaderError"
    jsonschema.validate(err, schemas.LINE_ERROR)


def test_profile_rigid(tmp_path):
    path = tmp_path / "in.g6"
    path.write_text(RIGID_8 + "\n")
    _, out = run(["profile", "--input", str(path)])
    rec = json.loads(out)
    assert rec["is_rigid"] and rec["endo_count"] == "1" and rec["endo_dist_number"] == 1
    assert rec["endo_motion"] is None and rec["auto_motion"] is None


def test_profile_concatenation():
    a = "\n".join(write_graph6(make_cycle(n)) for n in (3, 4, 5))
    b = "\n".join(write_graph6(make_path(n)) for n in (2, 3))
    _, out_a = run(["profile"], a)
    _, out_b = run(["profile"], b)
    _, out_ab = run(["profile"], a + "\n" + b)
    assert out_ab == out_a + out_b


def test_check_coloring():
    _, out = run(["check-coloring", "--graph", C6, "--colors", "1,1,0,1,0,0", "--mode", "endo"])
    assert json.loads(out) == {"mode": "endo", "distinguishing": True, "counterexample": None}
    _, out = run(["check-coloring", "--graph", C6, "--colors", "0,0,0,0,0,0"])
    rec = json.loads(out)
    assert rec["distinguishing"] is False and rec["counterexample"] is not None
    jsonschema.validate(rec, schemas.VERDICT)
    p8 = write_graph6(make_path(8))
    _, out = run(["check-coloring", "--graph", p8, "--colors", "0,0,1,1,0,0,1,1", "--mode", "endo"])
    assert json.loads(out)["distinguishing"] is True
    _, out = run(["check-coloring", "--graph", p8, "--colors", "0,0,0,1,0,0,0,0", "--mode", "auto"])
    assert json.loads(out)["distinguishing"] is True


def test_bound():
    _, out = run(["bound", "--graph", C5, "--lemma", "motion", "--d", "2"])
    assert json.loads(out)["holds"] is False
    _, out = run(["bound", "--graph", C5, "--lemma", "orbitnorm", "--d", "3"])
    rec = json.loads(out)
    assert rec["lhs"] == "49/81" and rec["holds"] is True
    jsonschema.validate(rec, schemas.BOUND)
    _, out = run(["bound", "--graph", RIGID_8, "--lemma", "orbitnorm", "--d", "2"])
    rec = json.loads(out)
    assert rec["lhs"] == "0" and rec["holds"] is True
    _, out = run(["bound", "--graph", RIGID_8, "--lemma", "rs", "--d", "2"])
    assert json.loads(out)["vacuous"] is True


def test_mc():
    k3 = write_graph6(parse_graph6("Bw"))
    _, out = run(["mc", "--graph", k3, "--d", "2", "--trials", "1000", "--seed", "7"])
    rec = json.loads(out)
    assert rec["successes"] == 0
    jsonschema.validate(rec, schemas.MONTE_CARLO)
    _, out = run(["mc", "--graph", RIGID_8, "--d", "2", "--trials", "40", "--seed", "0"])
    assert json.loads(out)["successes"] == 40
    _, a = run(["mc", "--graph", C6, "--d", "2", "--trials", "10000", "--seed", "1"])
    _, b = run(["mc", "--graph", C6, "--d", "2", "--trials", "10000", "--seed", "1"])
    assert a == b
    assert abs(json.loads(a)["point_estimate"] - 12 / 64) <= 3 * (12 / 64 * 52 / 64 / 10000) ** 0.5


def test_gen_output_is_the_family():
    _, out = run(["gen", "--family", "complete", "--n", "3"])
    assert find_isomorphism(parse_graph6(out), make_cycle(3)) is not None


def _cli(args, stdin="", env=None):
    return subprocess.run(
        [sys.executable, "-m", "endobreak", *args],
        input=stdin, capture_output=True, text=True, env=env,
    )


def test_subprocess_pipeline_and_threads():
    gen = _cli(["gen", "--family", "tree", "--n", "8", "--seed", "1", "--count", "6"])
    assert gen.returncode == 0
    serial = _cli(["profile"], gen.stdout)
    env = {**os.environ, "ENDOBREAK_THREADS": "4"}
    pooled = _cli(["profile"], gen.stdout, env)
    assert serial.returncode == pooled.returncode == 0
    assert serial.stdout == pooled.stdout
    assert [r["graph6"] for r in records(serial.stdout)] == gen.stdout.split()


def test_subprocess_exit_codes():
    assert _cli(["profile"], "@\n!!\n").returncode == 1
    assert _cli(["gen", "--family", "path"]).returncode == 2
    assert _cli([]).returncode == 2
