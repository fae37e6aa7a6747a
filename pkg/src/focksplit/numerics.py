"""Exact rationals, factorials and equally spaced periodic quadrature.

Every phase integral in this package is the mean of a trigonometric polynomial
over one period, so the M-point rectangle rule on [-pi, pi) is exact up to
rounding for degree <= M - 1.  Rounding is the only error left, and for Fock
inputs it is large: the integrands reach 2**N while the result can be ~1e-8,
so the default backend evaluates the nodes in gmpy2 ``mpfr`` arithmetic.
"""

from __future__ import annotations

import contextlib
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import gmpy2
import numpy as np

__all__ = [
    "ExactProb",
    "QuadratureSpec",
    "NODES_ENV_VAR",
    "default_spec",
    "log_factorial",
    "factorial_exact",
    "periodic_mean",
    "format_float",
]

#: Environment variable that overrides the default number of quadrature nodes.
NODES_ENV_VAR = "FOCKSPLIT_QUAD_NODES"


class ExactProb(Fraction):
    """A probability held as a reduced fraction of arbitrary-size integers.

    Construction accepts anything :class:`fractions.Fraction` accepts,
    including the ``"num/den"`` strings produced by ``str()``.  Values outside
    [0, 1] are rejected.  Arithmetic falls back to plain ``Fraction`` results,
    which stay exact and reduced.

    >>> str(ExactProb(6, 16))
    '3/8'
    >>> str(ExactProb(0))
    '0/1'
    """

    __slots__ = ()

    def __new__(cls, numerator=0, denominator=None):
        self = super().__new__(cls, numerator, denominator)
        if self < 0 or self > 1:
            raise ValueError(f"probability {Fraction(self)} outside [0, 1]")
        return self

    def __str__(self):
        return f"{self.numerator}/{self.denominator}"

    def __repr__(self):
        return f"ExactProb({self.numerator}, {self.denominator})"


@dataclass(frozen=True)
class QuadratureSpec:
    """Equally spaced nodes ``-pi + 2*pi*k/nodes`` on one period.

    The mean over the nodes is exact for trigonometric polynomials of degree
    up to ``nodes - 1`` (see :attr:`exactness_degree`).

    ``precision`` selects the arithmetic: ``None`` means numpy float64, an
    integer means gmpy2 ``mpfr`` with that many mantissa bits.
    """

    nodes: int
    precision: int | None = None

    def __post_init__(self):
        if not isinstance(self.nodes, (int, np.integer)) or self.nodes < 1:
            raise ValueError(f"quadrature needs at least one node, got {self.nodes!r}")
        if self.precision is not None and self.precision < 2:
            raise ValueError(f"precision must be >= 2 bits, got {self.precision}")

    @property
    def exactness_degree(self) -> int:
        return self.nodes - 1

    @property
    def extended(self) -> bool:
        return self.precision is not None

    def context(self):
        """Context manager that sets the mpfr precision (no-op for float64).

        All arithmetic on arrays returned by :meth:`cos`/:meth:`sin` must
        happen inside it, since gmpy2 rounds results to the active context.
        """
        if self.precision is None:
            return contextlib.nullcontext()
        return gmpy2.context(precision=self.precision)

    def angles(self):
        if self.precision is None:
            return _float_angles(self.nodes)
        return _mp_angles(self.nodes, self.precision)

    def cos(self, scale=1):
        """``cos(scale * t)`` at every node; ``scale`` may be a half-integer."""
        return self._trig(Fraction(scale), "cos")

    def sin(self, scale=1):
        return self._trig(Fraction(scale), "sin")

    def _trig(self, scale: Fraction, fn: str):
        if self.precision is None:
            return _float_trig(self.nodes, scale, fn)
        return _mp_trig(self.nodes, self.precision, scale, fn)

    def const(self, value):
        """Convert an int/Fraction/float to the backend number type."""
        if self.precision is None:
            return float(value)
        with self.context():
            if isinstance(value, Fraction):
                return gmpy2.mpfr(gmpy2.mpq(value.numerator, value.denominator))
            return gmpy2.mpfr(value)

    def sum(self, values):
        """Correctly rounded sum of an array of backend numbers."""
        flat = np.asarray(values).ravel().tolist()
        if self.precision is None:
            return math.fsum(flat)
        with self.context():
            return gmpy2.fsum(flat)

    def mean(self, values):
        """Mean of node values (any shape; every axis is a node axis)."""
        values = np.asarray(values)
        return self.sum(values) / values.size

    def even_fold(self):
        """Node indices and multiplicities for integrands even in the angle.

        Node ``k`` and node ``nodes - k`` sit at opposite angles, so an even
        integrand needs only ``k = 0 .. nodes // 2``.
        """
        m = self.nodes
        idx = np.arange(m // 2 + 1)
        mult = np.where((idx == 0) | (2 * idx == m), 1, 2)
        return idx, mult


@lru_cache(maxsize=64)
def _float_angles(nodes: int) -> np.ndarray:
    out = -np.pi + 2.0 * np.pi * np.arange(nodes) / nodes
    out.flags.writeable = False
    return out


@lru_cache(maxsize=64)
def _float_trig(nodes: int, scale: Fraction, fn: str) -> np.ndarray:
    # exact index arithmetic keeps scale*t reduced before the float cos
    k = np.arange(nodes)
    num = (2 * k - nodes) * scale.numerator
    den = nodes * scale.denominator
    turns = np.mod(num, 2 * den) / den  # in [0, 2)
    out = getattr(np, fn)(np.pi * turns)
    out.flags.writeable = False
    return out


@lru_cache(maxsize=64)
def _mp_angles(nodes: int, precision: int) -> np.ndarray:
    with gmpy2.context(precision=precision):
        pi = gmpy2.const_pi()
        return np.array([pi * gmpy2.mpq(2 * k - nodes, nodes) for k in range(nodes)], dtype=object)


@lru_cache(maxsize=256)
def _mp_trig(nodes: int, precision: int, scale: Fraction, fn: str) -> np.ndarray:
    func = getattr(gmpy2, fn)
    with gmpy2.context(precision=precision + 16):
        pi = gmpy2.const_pi()
        raw = []
        for k in range(nodes):
            turns = Fraction((2 * k - nodes) * scale.numerator, nodes * scale.denominator) % 2
            raw.append(func(pi * gmpy2.mpq(turns.numerator, turns.denominator)))
    with gmpy2.context(precision=precision):
        return np.array([+x for x in raw], dtype=object)


def default_spec(n_total: int) -> QuadratureSpec:
    """Quadrature used by the models for ``n_total`` particles.

    ``4*N + 8`` nodes (integrand degrees never exceed 2N) unless the
    ``FOCKSPLIT_QUAD_NODES`` environment variable says otherwise, and
    ``2*N + 64`` bits, enough headroom for the 2**N dynamic range of the
    Fock-state integrands.
    """
    env = os.environ.get(NODES_ENV_VAR)
    if env:
        try:
            nodes = int(env)
        except ValueError:
            raise ValueError(f"{NODES_ENV_VAR} must be an integer, got {env!r}") from None
    else:
        nodes = 4 * n_total + 8
    return QuadratureSpec(nodes=nodes, precision=2 * n_total + 64)


def factorial_exact(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    return math.factorial(n)


@lru_cache(maxsize=4096)
def log_factorial(n: int) -> float:
    """Natural log of ``n!``.

    Correctly rounded from the exact integer below 1024; ``lgamma`` above,
    which is within a few ulps there.
    """
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    if n < 1024:
        return math.log(math.factorial(n))
    return math.lgamma(n + 1.0)


def periodic_mean(f, spec: QuadratureSpec):
    """Mean of a 2*pi-periodic function over one period.

    ``f`` is called once with the array of node angles (float64, or mpfr
    objects when ``spec.precision`` is set) and must return an array of the
    same length.  Exact for trigonometric polynomials of degree below
    ``spec.nodes``.

    >>> periodic_mean(lambda t: np.cos(t) ** 2, QuadratureSpec(8))
    0.5
    """
    with spec.context():
        values = f(spec.angles())
    return spec.mean(values)


def format_float(x) -> str:
    """Float rendered with 17 significant digits (round-trips exactly)."""
    return format(float(x), ".17g")
