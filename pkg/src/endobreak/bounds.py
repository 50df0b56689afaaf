"""Sufficient conditions for d-distinguishability, checked in exact arithmetic.

Three criteria are supported:

``motion``
    ``d ** (m_e / 2) >= |End|``, compared as ``d ** m_e >= |End| ** 2``.
``orbitnorm``
    the sum of ``d ** -o(phi)`` over nontrivial endomorphisms is below 1.
``rs``
    the automorphism version, ``d ** m >= |Aut| ** 2``.

Each check returns a :class:`BoundReport`. A verdict is only drawn from a
complete enumeration; a capped enumeration gives ``holds=None``.

The Monte Carlo estimator samples independent random colorings with
:func:`numpy.random.default_rng` (PCG64 seeded through ``SeedSequence``),
which reproduces bit-exactly across platforms for a fixed seed.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import sqrt
from typing import Sequence

import numpy as np

from .breaking import is_endo_distinguishing
from .endo import (
    automorphism_motion,
    count_automorphisms,
    endomorphism_motion,
    enumerate_endomorphisms,
    is_identity,
    orbit_norm_of,
)
from .graph import Graph


@dataclass(frozen=True)
class BoundReport:
    bound_name: str
    d: int
    holds: bool | None
    lhs: int | Fraction | None
    rhs: int | Fraction | None
    implied_conclusion: str
    vacuous: bool = False

    def to_dict(self) -> dict:
        def text(x):
            return None if x is None else str(x)

        return {
            "bound": self.bound_name,
            "d": self.d,
            "holds": self.holds,
            "lhs": text(self.lhs),
            "rhs": text(self.rhs),
            "implied_conclusion": self.implied_conclusion,
            "vacuous": self.vacuous,
        }


def _check_d(d: int) -> None:
    if d < 2:
        raise ValueError("d must be at least 2")


def orbit_norm_spectrum(g: Graph, limit: int | None = None) -> Counter | None:
    """Multiset of orbit norms over End(g) minus the identity.

    ``None`` when ``limit`` truncates the enumeration.
    """
    spectrum: Counter = Counter()
    stream = enumerate_endomorphisms(g, limit)
    for f in stream:
        if not is_identity(f):
            spectrum[orbit_norm_of(f)] += 1
    return None if stream.truncated else spectrum


def orbit_norm_sum(spectrum: Counter, d: int) -> Fraction:
    return sum((Fraction(k, d**o) for o, k in spectrum.items()), Fraction(0))


def motion_lemma_check(g: Graph, d: int, limit: int | None = None) -> BoundReport:
    _check_d(d)
    name = "motion"
    motion = endomorphism_motion(g)
    if motion is None:
        return BoundReport(name, d, True, None, None, f"D_e <= {d}", vacuous=True)
    stream = enumerate_endomorphisms(g, limit)
    for _ in stream:
        pass
    if stream.truncated:
        return BoundReport(name, d, None, d**motion.value, None, "unknown")
    lhs, rhs = d**motion.value, stream.count**2
    holds = lhs >= rhs
    return BoundReport(name, d, holds, lhs, rhs, f"D_e <= {d}" if holds else "inconclusive")


def orbit_norm_lemma_check(
    g: Graph, d: int, limit: int | None = None
) -> BoundReport:
    _check_d(d)
    name = "orbitnorm"
    spectrum = orbit_norm_spectrum(g, limit)
    if spectrum is None:
        return BoundReport(name, d, None, None, Fraction(1), "unknown")
    total = orbit_norm_sum(spectrum, d)
    holds = total < 1
    return BoundReport(
        name, d, holds, total, Fraction(1), f"D_e <= {d}" if holds else "inconclusive"
    )


def russell_sundaram_check(g: Graph, d: int) -> BoundReport:
    _check_d(d)
    name = "rs"
    motion = automorphism_motion(g)
    if motion is None:
        return BoundReport(name, d, True, None, None, "D <= 1", vacuous=True)
    lhs, rhs = d**motion.value, count_automorphisms(g) ** 2
    holds = lhs >= rhs
    return BoundReport(name, d, holds, lhs, rhs, f"D <= {d}" if holds else "inconclusive")


CHECKS = {
    "motion": motion_lemma_check,
    "orbitnorm": orbit_norm_lemma_check,
    "rs": russell_sundaram_check,
}


@dataclass(frozen=True)
class MonteCarloEstimate:
    successes: int
    trials: int

    @property
    def point_estimate(self) -> float:
        return self.successes / self.trials

    @property
    def standard_error(self) -> float:
        p = self.point_estimate
        return sqrt(p * (1 - p) / self.trials)

    def to_dict(self) -> dict:
        return {
            "successes": self.successes,
            "trials": self.trials,
            "point_estimate": self.point_estimate,
            "standard_error": self.standard_error,
        }


def _check_bias(bias: Sequence[float], d: int, eps: float | None) -> np.ndarray:
    p = np.asarray(bias, dtype=float)
    if p.shape != (d,):
        raise ValueError(f"bias needs {d} entries, got {p.size}")
    lo = eps if eps is not None else 0.0
    if eps is not None and not 0 < eps <= 0.5:
        raise ValueError("eps must lie in (0, 1/2]")
    if np.any(p <= 0) or np.any(p >= 1) or np.any(p < lo) or np.any(p > 1 - lo):
        raise ValueError("every bias entry must lie strictly inside (0, 1) and within [eps, 1-eps]")
    if abs(p.sum() - 1) > 1e-9:
        raise ValueError(f"bias sums to {p.sum()}, not 1")
    return p


def monte_carlo_distinguishing(
    g: Graph,
    d: int,
    trials: int,
    bias: Sequence[float] | None = None,
    seed: int = 0,
    eps: float | None = None,
) -> MonteCarloEstimate:
    """Fraction of random colorings that break every nontrivial endomorphism.

    Vertex colors are drawn independently from ``bias`` (uniform by default).
    """
    _check_d(d)
    if trials < 1:
        raise ValueError("trials must be positive")
    p = _check_bias([1 / d] * d if bias is None else bias, d, eps)
    rng = np.random.default_rng(seed)
    samples = rng.choice(d, size=(trials, g.order), p=p)
    seen: dict[tuple[int, ...], bool] = {}
    successes = 0
    for row in samples:
        key = tuple(int(c) for c in row)
        ok = seen.get(key)
        if ok is None:
            ok = seen[key] = is_endo_distinguishing(g, key)
        successes += ok
    return MonteCarloEstimate(successes, trials)
