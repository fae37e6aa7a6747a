"""Exact output statistics of a 50/50 beam splitter fed by two Fock states.

Three independent routes to the same probabilities:

* :func:`exact_probability` -- the alternating binomial sum, in big integers;
* :func:`quadrature_probability` -- the double average over the classical
  phase angle and the quantum angle;
* :func:`amplitude` -- the single half-angle integral for the amplitude.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Mapping, NamedTuple

import numpy as np

from .numerics import ExactProb, QuadratureSpec, default_spec, factorial_exact, log_factorial

__all__ = [
    "BeamConfig",
    "Outcome",
    "Distribution",
    "exact_probability",
    "exact_distribution",
    "quadrature_probability",
    "quadrature_distribution",
    "amplitude",
]


@dataclass(frozen=True)
class BeamConfig:
    """Input populations of the two arms and the phase shift in the alpha arm."""

    n_alpha: int
    n_beta: int
    theta: float = 0.0

    def __post_init__(self):
        for name in ("n_alpha", "n_beta"):
            value = getattr(self, name)
            if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
                raise TypeError(f"{name} must be an integer, got {value!r}")
            if value < 0:
                raise ValueError(f"{name} must be >= 0, got {value}")

    @property
    def n_total(self) -> int:
        return self.n_alpha + self.n_beta

    @property
    def imbalance(self) -> int:
        return self.n_alpha - self.n_beta

    def swapped(self) -> "BeamConfig":
        return replace(self, n_alpha=self.n_beta, n_beta=self.n_alpha)


class Outcome(NamedTuple):
    """Counts registered by detectors 1 and 2."""

    m1: int
    m2: int


def _outcome(out) -> Outcome:
    m1, m2 = out
    if m1 < 0 or m2 < 0:
        raise ValueError(f"detector counts must be >= 0, got {(m1, m2)}")
    return Outcome(int(m1), int(m2))


@dataclass(frozen=True)
class Distribution:
    """Probabilities of ``(m1, N - m1)`` indexed by ``m1``.

    ``representation`` is ``"rational"`` when every entry is a
    :class:`~fractions.Fraction` and ``"float"`` otherwise.  Missing entries
    are zero.  ``meta`` carries model-specific extras (substituted rows,
    deviation reports...) that end up in the JSON envelope.
    """

    model: str
    n_total: int
    entries: Mapping[int, object]
    representation: str = "float"
    normalized: bool = True
    config: BeamConfig | None = None
    meta: Mapping[str, object] = field(default_factory=dict)

    def __post_init__(self):
        if self.representation not in ("rational", "float"):
            raise ValueError(f"unknown representation {self.representation!r}")
        for m1 in self.entries:
            if not 0 <= m1 <= self.n_total:
                raise ValueError(f"entry m1={m1} outside 0..{self.n_total}")

    def __getitem__(self, m1: int):
        return self.entries.get(m1, 0)

    def __len__(self):
        return self.n_total + 1

    def probabilities(self) -> np.ndarray:
        """Float array of length N + 1, indexed by m1."""
        out = np.zeros(self.n_total + 1)
        for m1, p in self.entries.items():
            out[m1] = float(p)
        return out

    def total(self):
        if self.representation == "rational":
            return sum((Fraction(p) for p in self.entries.values()), Fraction(0))
        return math.fsum(float(p) for p in self.entries.values())

    def rows(self):
        """``(m1, m2, p)`` for every m1 in 0..N, sorted."""
        zero = Fraction(0) if self.representation == "rational" else 0.0
        return [(m1, self.n_total - m1, self.entries.get(m1, zero)) for m1 in range(self.n_total + 1)]

    def argmax(self) -> list[int]:
        """All m1 attaining the largest probability."""
        probs = self.probabilities()
        if self.representation == "rational":
            best = max(self.entries.values())
            return sorted(m for m, p in self.entries.items() if p == best)
        return [int(m) for m in np.flatnonzero(probs == probs.max())]

    def normalize(self, model: str | None = None) -> "Distribution":
        total = self.total()
        if total <= 0:
            raise ValueError("cannot normalize a distribution with zero total weight")
        entries = {m1: p / total for m1, p in self.entries.items()}
        if self.representation == "rational":
            entries = {m1: ExactProb(p) for m1, p in entries.items()}
        return replace(self, entries=entries, normalized=True, model=model or self.model)

    def to_float(self) -> "Distribution":
        if self.representation == "float":
            return self
        return replace(self, entries={m: float(p) for m, p in self.entries.items()}, representation="float")


def exact_probability(cfg: BeamConfig, out) -> ExactProb:
    """Probability of detecting ``out = (m1, m2)`` as an exact rational.

    The alternating sum is taken over integers, multiplied through by
    ``m1! m2!`` so each term is a product of two binomials, and squared only
    after summation.  Zero whenever ``m1 + m2 != N``.

    >>> exact_probability(BeamConfig(1, 1), (1, 1))
    ExactProb(0, 1)
    >>> exact_probability(BeamConfig(2, 2), (4, 0))
    ExactProb(3, 8)
    """
    m1, m2 = _outcome(out)
    na, nb = cfg.n_alpha, cfg.n_beta
    if m1 + m2 != na + nb:
        return ExactProb(0)
    total = 0
    for p in range(max(0, na - m2), min(m1, na) + 1):
        term = math.comb(m1, p) * math.comb(m2, na - p)
        total += -term if p & 1 else term
    num = factorial_exact(na) * factorial_exact(nb) * total * total
    den = factorial_exact(m1) * factorial_exact(m2) << (na + nb)
    return ExactProb(num, den)


def exact_distribution(cfg: BeamConfig) -> Distribution:
    """The full exact distribution over m1 = 0..N (sums to exactly 1)."""
    n = cfg.n_total
    entries = {m1: exact_probability(cfg, (m1, n - m1)) for m1 in range(n + 1)}
    return Distribution("exact", n, entries, representation="rational", normalized=True, config=cfg)


def _check_conserved(cfg: BeamConfig, out: Outcome):
    if out.m1 + out.m2 != cfg.n_total:
        raise ValueError(
            f"outcome {tuple(out)} does not conserve particle number N={cfg.n_total}"
        )


def _log_ratio(cfg: BeamConfig, out: Outcome) -> float:
    """ln[Na! Nb! / (m1! m2!)]."""
    return (
        log_factorial(cfg.n_alpha)
        + log_factorial(cfg.n_beta)
        - log_factorial(out.m1)
        - log_factorial(out.m2)
    )


def _factorial_ratio(cfg: BeamConfig, out: Outcome, spec: QuadratureSpec):
    if spec.extended:
        ratio = Fraction(
            factorial_exact(cfg.n_alpha) * factorial_exact(cfg.n_beta),
            factorial_exact(out.m1) * factorial_exact(out.m2),
        )
        return spec.const(ratio)
    return math.exp(_log_ratio(cfg, out))


class _PhaseGrid:
    """Node tables shared by every outcome of one configuration."""

    def __init__(self, cfg: BeamConfig, spec: QuadratureSpec):
        self.cfg = cfg
        self.spec = spec
        # integrand is even in both angles: keep half of each axis
        idx, mult = spec.even_fold()
        with spec.context():
            c = spec.cos(1)[idx]
            # axis 0: classical phase angle, axis 1: quantum angle
            self.plus = c[np.newaxis, :] + c[:, np.newaxis]
            self.minus = c[np.newaxis, :] - c[:, np.newaxis]
            mult = mult.astype(object) if spec.extended else mult.astype(float)
            self.weight = np.outer(mult, spec.cos(cfg.imbalance)[idx] * mult)

    def probability(self, out: Outcome) -> float:
        spec = self.spec
        with spec.context():
            values = self.weight * self.plus ** out.m1 * self.minus ** out.m2
            mean = spec.sum(values) / spec.nodes**2
            return float(_factorial_ratio(self.cfg, out, spec) * mean)


def quadrature_probability(cfg: BeamConfig, out, spec: QuadratureSpec | None = None) -> float:
    """Probability from the double average over the two phase angles.

    The integrand has degree at most 2N in the quantum angle, so the default
    ``4N + 8`` nodes make the rule exact; the default mpfr precision keeps
    the heavy cancellation at small probabilities under control.  With a
    float64 spec the factorial prefactor is taken in log space.
    """
    out = _outcome(out)
    _check_conserved(cfg, out)
    spec = spec or default_spec(cfg.n_total)
    return _PhaseGrid(cfg, spec).probability(out)


def quadrature_distribution(cfg: BeamConfig, spec: QuadratureSpec | None = None) -> Distribution:
    spec = spec or default_spec(cfg.n_total)
    grid = _PhaseGrid(cfg, spec)
    n = cfg.n_total
    entries = {m1: grid.probability(Outcome(m1, n - m1)) for m1 in range(n + 1)}
    return Distribution(
        "quad",
        n,
        entries,
        representation="float",
        normalized=True,
        config=cfg,
        meta={"quadrature_nodes": spec.nodes, "precision_bits": spec.precision or 53},
    )


def amplitude(cfg: BeamConfig, out, spec: QuadratureSpec | None = None) -> complex:
    """Transition amplitude for ``(Na, Nb) -> (m1, m2)`` from the half-angle integral.

    Returns ``exp(i Na theta) i**Nb 2**(N/2) sqrt(Na! Nb!/(m1! m2!))`` times
    the mean of ``exp(i (Na-Nb) t/2) cos(t/2)**m1 sin(t/2)**m2``.  The phase
    in front is what the alpha-arm shifter and the mode transformation
    contribute; only the modulus is physical.
    """
    out = _outcome(out)
    _check_conserved(cfg, out)
    spec = spec or default_spec(cfg.n_total)
    half = Fraction(1, 2)
    with spec.context():
        q = spec.cos(half) ** out.m1 * spec.sin(half) ** out.m2
        shift = Fraction(cfg.imbalance, 2)
        # the means carry all the cancellation; rounding them once is harmless
        re = float(spec.mean(spec.cos(shift) * q))
        im = float(spec.mean(spec.sin(shift) * q))
    scale = math.exp(0.5 * (_log_ratio(cfg, out) + cfg.n_total * math.log(2.0)))
    phase = cmath.exp(1j * cfg.n_alpha * cfg.theta) * 1j ** (cfg.n_beta % 4)
    return complex(re * scale, im * scale) * phase
