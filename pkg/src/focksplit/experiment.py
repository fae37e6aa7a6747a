"""Simulated detection runs and distances between distributions."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .quantum import Distribution

__all__ = ["SampleResult", "ComparisonReport", "sample", "compare", "RNG_ALGORITHM"]

#: Bit generator behind :func:`sample`; recorded in every result.
RNG_ALGORITHM = "numpy.PCG64"

_NORM_TOL = 1e-12


@dataclass(frozen=True)
class SampleResult:
    """Shot counts per m1 (only outcomes that occurred are stored)."""

    counts: dict
    shots: int
    seed: int
    n_total: int
    model: str = ""
    algorithm: str = RNG_ALGORITHM
    meta: dict = field(default_factory=dict)

    def frequencies(self) -> np.ndarray:
        out = np.zeros(self.n_total + 1)
        for m1, c in self.counts.items():
            out[m1] = c
        return out / self.shots if self.shots else out

    def empirical(self) -> Distribution:
        freq = self.frequencies()
        return Distribution(f"{self.model}-empirical", self.n_total, dict(enumerate(freq.tolist())))


def sample(dist: Distribution, shots: int, seed: int) -> SampleResult:
    """Draw ``shots`` values of m1 by inverse-CDF lookup.

    Deterministic in ``(dist, shots, seed)``: one PCG64 stream seeded with
    ``seed`` supplies one uniform per shot, compared against the cumulative
    sum of the float probabilities in m1 order.
    """
    if shots < 0:
        raise ValueError(f"shots must be >= 0, got {shots}")
    if not 0 <= seed < 2**64:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    probs = dist.probabilities()
    if not dist.normalized or abs(math.fsum(probs) - 1.0) > _NORM_TOL:
        raise ValueError(f"cannot sample from unnormalised distribution {dist.model!r}")
    if np.any(probs < 0):
        raise ValueError("negative probability in distribution")
    counts = {}
    if shots:
        cdf = np.cumsum(probs)
        cdf /= cdf[-1]
        rng = np.random.Generator(np.random.PCG64(seed))
        draws = np.searchsorted(cdf, rng.random(shots), side="right")
        tally = np.bincount(draws, minlength=len(probs))
        counts = {int(m1): int(c) for m1, c in enumerate(tally) if c}
    return SampleResult(counts, shots, seed, dist.n_total, dist.model)


@dataclass(frozen=True)
class ComparisonReport:
    tvd: float
    max_abs: float
    max_rel: float
    floor: float = 1e-9


def compare(d1: Distribution, d2: Distribution, floor: float = 1e-9) -> ComparisonReport:
    """Distances between two distributions over the same N.

    ``tvd`` and ``max_abs`` are symmetric.  ``max_rel`` takes ``d1`` as the
    reference and only looks at entries where ``d1 > floor``.
    """
    if d1.n_total != d2.n_total:
        raise ValueError(f"distributions over different N: {d1.n_total} vs {d2.n_total}")
    p, q = d1.probabilities(), d2.probabilities()
    diff = np.abs(p - q)
    tvd = 0.5 * math.fsum(diff.tolist())
    mask = p > floor
    max_rel = float(np.max(diff[mask] / p[mask])) if mask.any() else 0.0
    return ComparisonReport(tvd, float(diff.max()), max_rel, floor)
