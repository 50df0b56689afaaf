from fractions import Fraction
from itertools import product

import pytest

from corpus import RIGID_8, atlas
from endobreak.bounds import (
    monte_carlo_distinguishing,
    motion_lemma_check,
    orbit_norm_lemma_check,
    orbit_norm_spectrum,
    russell_sundaram_check,
)
from endobreak.breaking import is_endo_distinguishing
from endobreak.graph import make_complete, make_cycle
from endobreak.graph6 import parse_graph6


@pytest.fixture(scope="module")
def rigid():
    return parse_graph6(RIGID_8)


def test_motion_lemma_examples():
    r = motion_lemma_check(make_cycle(5), 2)
    assert (r.lhs, r.rhs, r.holds, r.implied_conclusion) == (16, 100, False, "inconclusive")
    r = motion_lemma_check(make_cycle(5), 4)
    assert (r.lhs, r.rhs, r.holds, r.implied_conclusion) == (256, 100, True, "D_e <= 4")
    r = motion_lemma_check(make_complete(4), 24)
    assert (r.lhs, r.rhs, r.holds) == (576, 576, True)


def test_motion_lemma_truncated_is_unknown():
    r = motion_lemma_check(make_cycle(6), 2, limit=5)
    assert r.holds is None and r.implied_conclusion == "unknown"


def test_orbit_norm_examples(rigid):
    # C_5: 4 rotations with one orbit of size 5, 5 reflections with orbits 1, 2, 2
    assert orbit_norm_spectrum(make_cycle(5)) == {4: 4, 2: 5}
    r = orbit_norm_lemma_check(make_cycle(5), 3)
    assert r.lhs == Fraction(49, 81) and r.holds and r.implied_conclusion == "D_e <= 3"
    r = orbit_norm_lemma_check(make_cycle(5), 2)
    assert r.lhs == Fraction(3, 2) and r.holds is False
    r = orbit_norm_lemma_check(rigid, 2)
    assert r.lhs == 0 and r.holds
    assert orbit_norm_lemma_check(make_cycle(6), 2, limit=3).holds is None


def test_russell_sundaram_examples(rigid):
    r = russell_sundaram_check(make_cycle(7), 2)
    assert (r.lhs, r.rhs, r.holds) == (64, 196, False)
    r = russell_sundaram_check(make_cycle(7), 3)
    assert (r.lhs, r.rhs, r.holds, r.implied_conclusion) == (729, 196, True, "D <= 3")
    r = russell_sundaram_check(make_complete(2), 4)
    assert (r.lhs, r.rhs, r.holds) == (16, 4, True)
    r = russell_sundaram_check(rigid, 2)
    assert r.vacuous and r.holds and r.implied_conclusion == "D <= 1"


def test_d_must_be_at_least_two():
    for check in (motion_lemma_check, orbit_norm_lemma_check, russell_sundaram_check):
        with pytest.raises(ValueError):
            check(make_cycle(5), 1)


def test_exact_values_are_not_floats():
    for g in atlas(5, connected=True):
        for check in (motion_lemma_check, orbit_norm_lemma_check, russell_sundaram_check):
            r = check(g, 3)
            assert not isinstance(r.lhs, float) and not isinstance(r.rhs, float)


def test_monotone_in_d():
    for g in atlas(6, connected=True):
        for check in (motion_lemma_check, orbit_norm_lemma_check, russell_sundaram_check):
            verdicts = [check(g, d).holds for d in range(2, 8)]
            first = verdicts.index(True) if True in verdicts else len(verdicts)
            assert all(verdicts[first:])


def _exact_fraction(g, d):
    ok = sum(is_endo_distinguishing(g, c) for c in product(range(d), repeat=g.order))
    return Fraction(ok, d**g.order)


def test_monte_carlo_examples(rigid):
    assert monte_carlo_distinguishing(rigid, 2, 50, seed=3).point_estimate == 1.0
    assert monte_carlo_distinguishing(make_complete(3), 2, 500, seed=7).successes == 0
    exact = _exact_fraction(make_cycle(6), 2)
    assert exact == Fraction(12, 64)
    est = monte_carlo_distinguishing(make_cycle(6), 2, 10_000, seed=1)
    se = (float(exact) * (1 - float(exact)) / est.trials) ** 0.5
    assert abs(est.point_estimate - float(exact)) <= 3 * se


def test_monte_carlo_reproducible_and_biased():
    a = monte_carlo_distinguishing(make_cycle(6), 2, 300, seed=11)
    b = monte_carlo_distinguishing(make_cycle(6), 2, 300, seed=11)
    assert a == b
    skewed = monte_carlo_distinguishing(make_cycle(6), 2, 2000, bias=[0.9, 0.1], seed=2)
    assert 0 <= skewed.successes <= 2000


@pytest.mark.parametrize(
    "bias, eps",
    [([0.5], None), ([0.7, 0.7], None), ([1.0, 0.0], None), ([0.95, 0.05], 0.1)],
)
def test_monte_carlo_rejects_bad_bias(bias, eps):
    with pytest.raises(ValueError):
        monte_carlo_distinguishing(make_cycle(6), 2, 10, bias=bias, eps=eps)
