"""
Phase-average form and amplitudes
=================================

The same probabilities can be computed as an average over two phases.
The integrand is a trigonometric polynomial, so a rectangle rule with
enough equally spaced nodes is exact up to rounding.  For larger N the
terms cancel badly in float64; the default grid therefore runs in
extended precision (gmpy2) with about 2N + 64 bits.
"""

# %%
import math

from focksplit.numerics import QuadratureSpec, default_spec
from focksplit.quantum import BeamConfig, amplitude, exact_probability, quadrature_probability

cfg = BeamConfig(44, 6)
out = (50, 0)
exact = float(exact_probability(cfg, out))
print("exact         ", exact)
print("default grid  ", quadrature_probability(cfg, out), default_spec(cfg.n_total))

# %%
# Plain float64 on the same nodes: the cancellation shows up.
float_grid = QuadratureSpec(4 * cfg.n_total + 8)
approx = quadrature_probability(cfg, out, float_grid)
print("float64 grid  ", approx, "rel err", abs(approx / exact - 1))

# %%
# Amplitudes carry a phase.  The phase shift theta on one input changes the
# amplitude's phase and nothing else.
for theta in (0.0, 0.7, math.pi / 2):
    a = amplitude(BeamConfig(4, 5, theta), (3, 6))
    print(f"theta={theta:.3f}  amp={a:.6f}  |amp|^2={abs(a) ** 2:.15f}")
print("exact          ", float(exact_probability(BeamConfig(4, 5), (3, 6))))
