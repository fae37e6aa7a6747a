"""Reference models the Fock-state result is compared against.

* classical waves with a uniformly random relative phase (arcsine law);
* independent classical particles with that random phase (semiclassical);
* coherent-state inputs (product of Poisson laws, optionally phase averaged);
* the quantum formula with the quantum angle frozen at zero;
* repeated independent two-particle events (pair model).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

import numpy as np
from scipy import stats

from .numerics import ExactProb, QuadratureSpec, default_spec, factorial_exact
from .quantum import BeamConfig, Distribution

__all__ = [
    "ClassicalWaveParams",
    "CoherentParams",
    "JointDistribution",
    "contrast",
    "classical_pdf",
    "classical_distribution",
    "semiclassical_distribution",
    "semiclassical_closed_form",
    "coherent_distribution",
    "lambda0_distribution",
    "lambda0_closed_form",
    "pair_model_distribution",
]


def contrast(i_alpha: float, i_beta: float) -> float:
    """Interference contrast ``2 sqrt(Ia Ib) / (Ia + Ib)``, in [0, 1]."""
    if i_alpha < 0 or i_beta < 0 or i_alpha + i_beta == 0:
        raise ValueError("intensities must be non-negative and not both zero")
    return 2.0 * math.sqrt(i_alpha * i_beta) / (i_alpha + i_beta)


@dataclass(frozen=True)
class ClassicalWaveParams:
    i_alpha: float
    i_beta: float

    def __post_init__(self):
        if not self.i_alpha > 0:
            raise ValueError(f"i_alpha must be > 0, got {self.i_alpha}")
        if self.i_beta < 0:
            raise ValueError(f"i_beta must be >= 0, got {self.i_beta}")

    @property
    def x(self) -> float:
        return math.sqrt(self.i_beta / self.i_alpha)

    @property
    def r(self) -> float:
        return 2.0 * self.x / (1.0 + self.x**2)

    @property
    def support(self) -> tuple[float, float]:
        return (self.i_alpha * (1.0 - self.x) ** 2 / 2.0, self.i_alpha * (1.0 + self.x) ** 2 / 2.0)


def classical_pdf(intensity: float, params: ClassicalWaveParams) -> float:
    """Density of one output intensity when the relative phase is uniform.

    Zero outside the interference range; the density diverges at both ends,
    so asking for an endpoint raises ``ValueError``.
    """
    lo, hi = params.support
    if intensity == lo or intensity == hi:
        raise ValueError(f"classical density is singular at the endpoint I={intensity}")
    if not lo < intensity < hi:
        return 0.0
    return 1.0 / (math.pi * math.sqrt((intensity - lo) * (hi - intensity)))


def classical_distribution(n: int, r: float) -> Distribution:
    """Arcsine law mapped onto m1 = 0..N and integrated over unit bins.

    Output 1 carries the fraction ``(1 + r cos)/2`` of the total, so
    ``m1/N`` is arcsine-distributed on ``[(1-r)/2, (1+r)/2]``; bin ``m1``
    covers ``[m1 - 1/2, m1 + 1/2]``.  Binning keeps the endpoint
    singularities finite.
    """
    if not 0.0 <= r <= 1.0:
        raise ValueError(f"contrast r must be in [0, 1], got {r}")
    if n == 0:
        return Distribution("classical", 0, {0: 1.0})
    lo, hi = n * (1.0 - r) / 2.0, n * (1.0 + r) / 2.0
    edges = np.arange(n + 2) - 0.5
    if hi == lo:
        cdf = (edges > lo).astype(float)
    else:
        frac = np.clip((edges - lo) / (hi - lo), 0.0, 1.0)
        cdf = 2.0 / math.pi * np.arcsin(np.sqrt(frac))
    probs = np.diff(cdf)
    return Distribution("classical", n, {m: float(p) for m, p in enumerate(probs)}, meta={"r": r})


def semiclassical_distribution(n: int, r: float, spec: QuadratureSpec | None = None) -> Distribution:
    """Binomial splitting averaged over a uniform relative phase.

    ``N!/(2**N m1! m2!) <(1 + r cos l)**m1 (1 - r cos l)**m2>``; the phase
    average is a degree-N trigonometric polynomial, exact on the default grid.
    """
    if not 0.0 <= r <= 1.0:
        raise ValueError(f"contrast r must be in [0, 1], got {r}")
    spec = spec or default_spec(n)
    entries = {}
    with spec.context():
        c = spec.cos(1) * spec.const(Fraction(r))
        one = spec.const(1)
        plus, minus = one + c, one - c
        for m1 in range(n + 1):
            weight = spec.const(Fraction(math.comb(n, m1), 1 << n))
            entries[m1] = float(weight * spec.mean(plus**m1 * minus ** (n - m1)))
    return Distribution("semiclassical", n, entries, meta={"r": r, "quadrature_nodes": spec.nodes})


def _semiclassical_weight(m1: int, m2: int, r2: Fraction) -> Fraction:
    # binomial expansion of both factors, then <cos^(2k)> = C(2k, k) / 4**k;
    # odd powers of cos average to zero, so only even p + q survive
    total = Fraction(0)
    for k in range((m1 + m2) // 2 + 1):
        inner = 0
        for p in range(max(0, 2 * k - m2), min(m1, 2 * k) + 1):
            q = 2 * k - p
            term = math.comb(m1, p) * math.comb(m2, q)
            inner += -term if q & 1 else term
        if inner:
            total += inner * math.comb(2 * k, k) * (r2 / 4) ** k
    return total * 2 / (factorial_exact(m1) * factorial_exact(m2))


def semiclassical_closed_form(n: int, r: float) -> Distribution:
    """Double-sum form of the semiclassical law, normalised numerically.

    The sums run in exact rationals (``r`` is taken as the exact binary value
    of the float), so the alternating terms cancel without loss.
    """
    if not 0.0 <= r <= 1.0:
        raise ValueError(f"contrast r must be in [0, 1], got {r}")
    r2 = Fraction(r) ** 2
    weights = {m1: _semiclassical_weight(m1, n - m1, r2) for m1 in range(n + 1)}
    total = sum(weights.values())
    entries = {m1: float(w / total) for m1, w in weights.items()}
    return Distribution("semiclassical", n, entries, meta={"r": r, "form": "closed"})


@dataclass(frozen=True)
class CoherentParams:
    """Complex input field amplitudes and the alpha-arm phase shift."""

    e_alpha: complex
    e_beta: complex
    theta: float = 0.0

    @classmethod
    def from_intensities(cls, i_alpha: float, i_beta: float, phase: float = 0.0) -> "CoherentParams":
        """Real-field inputs with relative phase ``phase`` put on the alpha field."""
        if i_alpha < 0 or i_beta < 0:
            raise ValueError("intensities must be >= 0")
        return cls(math.sqrt(i_alpha) * cmath.exp(1j * phase), complex(math.sqrt(i_beta)))

    @property
    def intensities(self) -> tuple[float, float]:
        return abs(self.e_alpha) ** 2, abs(self.e_beta) ** 2

    @property
    def relative_phase(self) -> float:
        return cmath.phase(self.e_alpha) - cmath.phase(self.e_beta) + self.theta

    def output_fields(self, extra_phase: float = 0.0) -> tuple[complex, complex]:
        ea = self.e_alpha * cmath.exp(1j * (self.theta + extra_phase))
        return (ea + 1j * self.e_beta) / math.sqrt(2.0), (1j * ea + self.e_beta) / math.sqrt(2.0)

    @property
    def output_means(self) -> tuple[float, float]:
        f1, f2 = self.output_fields()
        return abs(f1) ** 2, abs(f2) ** 2


@dataclass(frozen=True)
class JointDistribution:
    """Probabilities over ``(m1, m2)`` pairs, ``probs[m1, m2]``, both in 0..cutoff."""

    model: str
    probs: np.ndarray
    meta: Mapping[str, object] = field(default_factory=dict)
    normalized: bool = True

    @property
    def cutoff(self) -> int:
        return self.probs.shape[0] - 1

    def total(self) -> float:
        return math.fsum(self.probs.ravel().tolist())

    def marginal(self, detector: int = 1) -> np.ndarray:
        return self.probs.sum(axis=2 - detector)

    def rows(self):
        """``(m1, m2, p)`` sorted by m1 then m2."""
        k = self.cutoff
        return [(m1, m2, float(self.probs[m1, m2])) for m1 in range(k + 1) for m2 in range(k + 1)]

    def conditional(self, n: int) -> Distribution:
        """Law of m1 given ``m1 + m2 = n`` (requires ``n <= cutoff``)."""
        if n > self.cutoff:
            raise ValueError(f"N={n} beyond truncation cutoff {self.cutoff}")
        diag = np.array([self.probs[m1, n - m1] for m1 in range(n + 1)])
        return Distribution(self.model, n, {m1: float(p) for m1, p in enumerate(diag / diag.sum())})


def _poisson_cutoff(mean: float, tol: float) -> int:
    if mean == 0:
        return 0
    return int(stats.poisson.isf(tol, mean)) + 1


def coherent_distribution(
    params: CoherentParams,
    phase_averaged: bool = False,
    spec: QuadratureSpec | None = None,
    tol: float = 1e-12,
) -> JointDistribution:
    """Photon-count law at the two outputs for coherent inputs.

    Fixed phase: independent Poisson counts with the output intensities as
    means.  Phase averaged: the same law averaged over a uniform relative
    phase.  Both modes are truncated to ``m1, m2 <= cutoff`` so that the
    discarded mass is below ``tol``.  The phase average is a polynomial of
    degree ``m1 + m2 <= 2*cutoff`` in the phase, so the default grid uses
    ``8*cutoff + 8`` nodes; quadrature here always runs in float64.
    """
    total_intensity = sum(params.intensities)
    # every output mean is <= Ia + Ib, and the Poisson tail grows with the mean
    cutoff = _poisson_cutoff(total_intensity, tol / 4)
    counts = np.arange(cutoff + 1)
    meta = {"i_alpha": params.intensities[0], "i_beta": params.intensities[1], "cutoff": cutoff}
    if not phase_averaged:
        mu1, mu2 = params.output_means
        probs = np.outer(stats.poisson.pmf(counts, mu1), stats.poisson.pmf(counts, mu2))
        meta.update(phase_averaged=False, relative_phase=params.relative_phase)
        return JointDistribution("coherent", probs, meta)

    nodes = spec.nodes if spec is not None else 8 * cutoff + 8
    angles = -np.pi + 2.0 * np.pi * np.arange(nodes) / nodes
    probs = np.zeros((cutoff + 1, cutoff + 1))
    for t in angles:
        f1, f2 = params.output_fields(t)
        probs += np.outer(stats.poisson.pmf(counts, abs(f1) ** 2), stats.poisson.pmf(counts, abs(f2) ** 2))
    probs /= nodes
    meta.update(phase_averaged=True, quadrature_nodes=nodes)
    return JointDistribution("coherent", probs, meta)


def lambda0_distribution(cfg: BeamConfig, spec: QuadratureSpec | None = None) -> Distribution:
    """Quantum double average with the quantum angle set to zero, normalised.

    What is left is ``Na! Nb!/(m1! m2!) <(1 + cos l)**m1 (1 - cos l)**m2>``:
    a positive integrand, hence no parity zeros.
    """
    n = cfg.n_total
    spec = spec or default_spec(n)
    weights = {}
    with spec.context():
        c = spec.cos(1)
        one = spec.const(1)
        plus, minus = one + c, one - c
        for m1 in range(n + 1):
            ratio = Fraction(
                factorial_exact(cfg.n_alpha) * factorial_exact(cfg.n_beta),
                factorial_exact(m1) * factorial_exact(n - m1),
            )
            weights[m1] = spec.const(ratio) * spec.mean(plus**m1 * minus ** (n - m1))
        total = spec.sum(list(weights.values()))
        entries = {m1: float(w / total) for m1, w in weights.items()}
    return Distribution("lambda0", n, entries, config=cfg, meta={"quadrature_nodes": spec.nodes})


def lambda0_closed_form(cfg: BeamConfig, reference: Distribution | None = None) -> Distribution:
    """The closed summation for the zero-quantum-angle model, taken literally.

    Evaluated in exact rationals and normalised.  ``meta["deviation"]`` lists
    ``literal - quadrature`` per m1 against :func:`lambda0_distribution` (or
    ``reference`` if given) and ``meta["max_abs_deviation"]`` its maximum.
    """
    n = cfg.n_total
    weights = {}
    for m1 in range(n + 1):
        m2 = n - m1
        total = Fraction(0)
        for p in range(0, 2 * m1 + 1):
            if p > n or p - 2 * m1 + n < 0:
                continue
            den = (
                factorial_exact(p)
                * factorial_exact(2 * m1 - p)
                * factorial_exact(n - p)
                * factorial_exact(p - 2 * m1 + n)
            )
            total += Fraction(-1 if (m1 + p) & 1 else 1, den)
        prefactor = Fraction(
            factorial_exact(n) * factorial_exact(2 * m1) * factorial_exact(2 * m2),
            4**n * factorial_exact(m1) * factorial_exact(m2),
        )
        weights[m1] = prefactor * total
    norm = sum(weights.values())
    entries = {m1: ExactProb(w / norm) for m1, w in weights.items()}
    reference = reference or lambda0_distribution(cfg)
    deviation = [float(entries[m1]) - float(reference[m1]) for m1 in range(n + 1)]
    return Distribution(
        "lambda0-literal", n, entries, representation="rational", config=cfg,
        meta={"deviation": deviation, "max_abs_deviation": max(abs(d) for d in deviation)},
    )


def pair_model_distribution(cfg: BeamConfig) -> Distribution:
    """Counts from independent two-particle events plus unpaired extras.

    Each particle of the smaller beam is paired with one of the larger; a
    pair sends both particles to the same detector, an unpaired particle goes
    either way.  Weights are multinomial slot counts, zero whenever the
    paired part of m1 is odd; the result is normalised exactly.
    """
    big, small = max(cfg.n_alpha, cfg.n_beta), min(cfg.n_alpha, cfg.n_beta)
    excess = big - small
    n = cfg.n_total
    weights = {}
    for m1 in range(n + 1):
        w = 0
        for s in range(excess + 1):
            paired = m1 - s
            if paired < 0 or paired & 1:
                continue
            filled = paired // 2
            empty = small - filled
            if empty < 0:
                continue
            w += 2 * (
                factorial_exact(big)
                // (factorial_exact(filled) * factorial_exact(excess - s) * factorial_exact(s) * factorial_exact(empty))
            )
        weights[m1] = w
    total = sum(weights.values())
    entries = {m1: ExactProb(w, total) for m1, w in weights.items()}
    return Distribution("pair", n, entries, representation="rational", config=cfg)
