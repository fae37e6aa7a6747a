"""Saddle-point (double Gaussian) approximations and their envelopes.

The half-angle integrand ``Q = cos(t/2)**m1 * sin(t/2)**m2`` peaks at
``+-phi0`` with ``cos(phi0/2)**2 = m1/N``.  Replacing each peak by a Gaussian
gives :func:`gaussian_probability`; replacing the remaining factorials by
Stirling's formula gives :func:`stirling_probability`.  Both carry a
``cos**2`` or ``sin**2`` modulation of ``(Na - Nb) phi0 / 2`` depending on the
parity of m2, and :func:`envelope_curves` exposes those two branches.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np
from scipy.optimize import brentq

from .numerics import log_factorial
from .quantum import BeamConfig, Distribution, Outcome, _outcome, exact_probability

__all__ = [
    "OutsideValidityError",
    "GaussianFit",
    "Envelope",
    "phi0",
    "q_function",
    "gaussian_fit",
    "gaussian_probability",
    "stirling_probability",
    "approx_distribution",
    "envelope_curves",
    "envelope_crossings",
    "envelope_nodes",
]


class OutsideValidityError(ValueError):
    """Raised when an approximation is asked for counts it does not cover."""


def phi0(m1: int, n: int) -> float:
    """Position of the positive peak of ``Q``: ``2 arccos(sqrt(m1/N))``.

    >>> round(phi0(17, 100) / math.pi, 3)
    0.729
    """
    if n <= 0:
        raise ValueError("peak position undefined for N = 0")
    if not 0 <= m1 <= n:
        raise ValueError(f"m1={m1} outside 0..{n}")
    return 2.0 * math.acos(math.sqrt(m1 / n))


def q_function(phibar, out):
    """``cos(phibar/2)**m1 * sin(phibar/2)**m2``; vectorised over ``phibar``."""
    m1, m2 = _outcome(out)
    half = np.asarray(phibar, dtype=float) / 2.0
    return np.cos(half) ** m1 * np.sin(half) ** m2


@dataclass(frozen=True)
class GaussianFit:
    """Double Gaussian standing in for ``Q`` near its two peaks.

    ``curvature`` is ``-d^2 log Q / d(phibar/2)^2`` at the peak, which equals
    2N for every outcome; in ``phibar`` itself the Gaussians read
    ``exp(-N/4 (phibar -+ phi0)**2)``.  ``prefactor`` is ``Q(phi0)`` and the
    peak at ``-phi0`` carries ``sign = (-1)**m2``.
    """

    phi0: float
    curvature: float
    prefactor: float
    sign: int = 1

    def __call__(self, phibar):
        phibar = np.asarray(phibar, dtype=float)
        k = self.curvature / 8.0
        return self.prefactor * (
            np.exp(-k * (phibar - self.phi0) ** 2) + self.sign * np.exp(-k * (phibar + self.phi0) ** 2)
        )


def gaussian_fit(out) -> GaussianFit:
    m1, m2 = _outcome(out)
    n = m1 + m2
    peak = phi0(m1, n)
    log_height = 0.0
    if m1:
        log_height += 0.5 * m1 * math.log(m1 / n)
    if m2:
        log_height += 0.5 * m2 * math.log(m2 / n)
    return GaussianFit(peak, 2.0 * n, math.exp(log_height), -1 if m2 % 2 else 1)


def _modulation(cfg: BeamConfig, out: Outcome) -> float:
    arg = cfg.imbalance * phi0(out.m1, cfg.n_total) / 2.0
    return math.sin(arg) ** 2 if out.m2 % 2 else math.cos(arg) ** 2


def _validated(cfg: BeamConfig, out, min_count: int) -> Outcome:
    out = _outcome(out)
    if out.m1 + out.m2 != cfg.n_total:
        raise ValueError(f"outcome {tuple(out)} does not conserve N={cfg.n_total}")
    if out.m1 < min_count or out.m2 < min_count:
        raise OutsideValidityError(
            f"approximation needs m1, m2 >= {min_count}, got {tuple(out)}"
        )
    return out


def gaussian_probability(cfg: BeamConfig, out) -> float:
    """Probability from Fourier transforming the double Gaussian, exact factorials.

    Requires ``m1 >= 1`` and ``m2 >= 1``.  For ``Na == Nb`` and odd ``m2``
    the ``sin**2`` branch is exactly 0.
    """
    out = _validated(cfg, out, 1)
    mod = _modulation(cfg, out)
    if mod == 0.0:
        return 0.0
    n, d = cfg.n_total, cfg.imbalance
    m1, m2 = out
    log_p = (
        (n + 2) * math.log(2.0)
        + log_factorial(cfg.n_alpha)
        + log_factorial(cfg.n_beta)
        - math.log(math.pi)
        - (n + 1) * math.log(n)
        + m1 * math.log(m1)
        + m2 * math.log(m2)
        - log_factorial(m1)
        - log_factorial(m2)
        - d * d / (2.0 * n)
    )
    return math.exp(log_p) * mod


def stirling_probability(cfg: BeamConfig, out) -> float:
    """:func:`gaussian_probability` with ``m! ~ sqrt(2 pi) m**(m+1/2) e**-m``.

    This leaves the ``1/sqrt(m1 m2)`` envelope times ``e**N``.  Requires
    ``m1 >= 3`` and ``m2 >= 3``.
    """
    out = _validated(cfg, out, 3)
    mod = _modulation(cfg, out)
    if mod == 0.0:
        return 0.0
    n, d = cfg.n_total, cfg.imbalance
    log_p = (
        (n + 1) * math.log(2.0)
        + log_factorial(cfg.n_alpha)
        + log_factorial(cfg.n_beta)
        - 2.0 * math.log(math.pi)
        - (n + 1) * math.log(n)
        + n
        - 0.5 * math.log(out.m1 * out.m2)
        - d * d / (2.0 * n)
    )
    return math.exp(log_p) * mod


_METHODS = {
    "gauss": (gaussian_probability, 1),
    "stirling": (stirling_probability, 3),
}


def approx_distribution(cfg: BeamConfig, method: str = "stirling", fallback: bool = True) -> Distribution:
    """Approximate distribution over all m1, unnormalised.

    Outside the validity region the exact value is substituted when
    ``fallback`` is true (those m1 are listed in ``meta["substituted"]``);
    otherwise :class:`OutsideValidityError` propagates.
    """
    func, min_count = _METHODS[method]
    n = cfg.n_total
    entries, substituted = {}, []
    for m1 in range(n + 1):
        out = Outcome(m1, n - m1)
        if min(out) < min_count:
            if not fallback:
                raise OutsideValidityError(
                    f"{method} approximation undefined at m1={m1}; enable fallback to use exact values"
                )
            entries[m1] = float(exact_probability(cfg, out))
            substituted.append(m1)
        else:
            entries[m1] = func(cfg, out)
    return Distribution(
        method, n, entries, representation="float", normalized=False, config=cfg,
        meta={"substituted": substituted},
    )


class Envelope(NamedTuple):
    """Modulation factors as functions of m1 (accept floats and arrays).

    ``even`` applies where m2 is even (``cos**2``), ``odd`` where m2 is odd
    (``sin**2``).
    """

    even: Callable
    odd: Callable


def envelope_curves(cfg: BeamConfig) -> Envelope:
    """The two modulation branches for this input.

    Closed forms for ``|Na - Nb| <= 2``; otherwise ``cos**2``/``sin**2`` of
    ``(Na - Nb) phi0 / 2`` evaluated directly.
    """
    n, d = cfg.n_total, abs(cfg.imbalance)
    if n == 0:
        raise ValueError("envelope undefined for N = 0")

    if d == 0:
        return Envelope(lambda m1: np.ones_like(np.asarray(m1, dtype=float)),
                        lambda m1: np.zeros_like(np.asarray(m1, dtype=float)))
    if d == 1:
        return Envelope(lambda m1: np.asarray(m1, dtype=float) / n,
                        lambda m1: (n - np.asarray(m1, dtype=float)) / n)
    if d == 2:
        return Envelope(lambda m1: (2.0 * np.asarray(m1, dtype=float) / n - 1.0) ** 2,
                        lambda m1: 4.0 * np.asarray(m1, dtype=float) * (n - np.asarray(m1, dtype=float)) / n**2)

    def arg(m1):
        u = np.clip(np.asarray(m1, dtype=float) / n, 0.0, 1.0)
        return d * np.arccos(np.sqrt(u))

    return Envelope(lambda m1: np.cos(arg(m1)) ** 2, lambda m1: np.sin(arg(m1)) ** 2)


def envelope_crossings(cfg: BeamConfig, resolution: int = 64) -> list[float]:
    """Real m1 in (0, N) where the two branches are equal, ascending.

    Brackets sign changes of ``even - odd`` on a grid of ``resolution`` points
    per unit m1 and refines each with Brent's method.
    """
    env = envelope_curves(cfg)
    n = cfg.n_total
    if cfg.imbalance == 0:
        return []

    def gap(x):
        return float(env.even(x) - env.odd(x))

    grid = np.linspace(0.0, n, n * resolution + 1)
    values = env.even(grid) - env.odd(grid)
    roots = []
    for i in range(len(grid) - 1):
        a, b = values[i], values[i + 1]
        if a == 0.0 and 0 < grid[i] < n:
            roots.append(float(grid[i]))
        elif a * b < 0:
            roots.append(brentq(gap, grid[i], grid[i + 1], xtol=1e-13))
    return roots


def envelope_nodes(cfg: BeamConfig) -> list[tuple[int, int]]:
    """Consecutive integer pairs ``(m, m + 1)`` straddling each branch crossing.

    A crossing that lands exactly on an integer ``m`` is reported as ``(m, m)``.
    """
    nodes = []
    for x in envelope_crossings(cfg):
        lo = math.floor(x)
        nodes.append((lo, lo) if x == lo else (lo, lo + 1))
    return nodes
