"""
Large-N approximations
======================

For large counts the inner phase integral is dominated by a narrow peak
and a Gaussian fit gives a closed expression.  Replacing the factorials by
Stirling's formula makes it fully analytic.  Both are checked here against
the exact values.
"""

# %%
import math

import numpy as np

from focksplit.approx import (
    approx_distribution,
    envelope_crossings,
    envelope_nodes,
    gaussian_fit,
    phi0,
    q_function,
)
from focksplit.experiment import compare
from focksplit.quantum import BeamConfig, exact_distribution

# the integrand Q peaks at phi0; for m1 = 17, m2 = 83 that is near 0.73 pi
print("phi0 / pi =", phi0(17, 100) / math.pi)
fit = gaussian_fit((17, 83))
for dphi in (-0.1, -0.05, 0.0, 0.05, 0.1):
    x = fit.phi0 + dphi
    print(f"{x:.4f}  Q={float(q_function(x, (17, 83))):.6e}  gauss={float(fit(x)):.6e}")

# %%
# Relative error of the two approximations across a full distribution.
cfg = BeamConfig(25, 25)
exact = exact_distribution(cfg)
for method in ("gauss", "stirling"):
    d = approx_distribution(cfg, method)
    report = compare(exact, d)
    print(f"{method:9s} max_rel={report.max_rel:.4f}  tvd={report.tvd:.2e}  substituted={d.meta['substituted']}")

# %%
# With unequal inputs the even and odd rows follow two different envelopes
# which swap over at a few points ("nodes").
for na, nb in [(26, 25), (26, 24), (28, 22)]:
    cfg = BeamConfig(na, nb)
    print((na, nb), np.round(envelope_crossings(cfg), 4), envelope_nodes(cfg))
