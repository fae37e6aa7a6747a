"""
Classical and semiclassical pictures
====================================

Waves with a random relative phase give an arcsine law for the output
intensity.  Particles that split independently with that random phase give
a binomial smeared over the phase.  Coherent inputs give Poisson counts.
None of them shows the parity zeros of the Fock result.
"""

# %%
import numpy as np

from focksplit.baselines import (
    CoherentParams,
    classical_distribution,
    coherent_distribution,
    contrast,
    lambda0_distribution,
    semiclassical_closed_form,
    semiclassical_distribution,
)
from focksplit.experiment import compare
from focksplit.quantum import BeamConfig, exact_distribution

n = 50
for ia, ib in [(25, 25), (44, 6)]:
    r = contrast(ia, ib)
    semi = semiclassical_distribution(n, r)
    wave = classical_distribution(n, r)
    print(f"intensities {ia}:{ib}  r={r:.4f}  tvd(semi, wave)={compare(semi, wave).tvd:.3f}")
    print("   closed-form check:", np.max(np.abs(semi.probabilities() - semiclassical_closed_form(n, r).probabilities())))

# %%
# Freezing the quantum angle at zero in the phase-average form leaves
# exactly the semiclassical law.
print("tvd(lambda0, semiclassical) =", compare(lambda0_distribution(BeamConfig(25, 25)), semiclassical_distribution(50, 1.0)).tvd)
print("tvd(exact, semiclassical)   =", compare(exact_distribution(BeamConfig(25, 25)), semiclassical_distribution(50, 1.0)).tvd)

# %%
# Coherent inputs: averaging over the phase and conditioning on the total
# count gives the semiclassical law again.
joint = coherent_distribution(CoherentParams.from_intensities(5.0, 5.0), phase_averaged=True)
print("cutoff", joint.cutoff, "mass", joint.total())
print(np.round(joint.conditional(6).probabilities(), 6))
print(np.round(semiclassical_distribution(6, 1.0).probabilities(), 6))
