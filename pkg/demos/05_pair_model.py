"""
A naive pair model
==================

One might guess that N particles behave like N/2 independent two-particle
events, each sending both particles to the same side.  That guess puts the
mass in the middle, the opposite of what the exact result says.
"""

# %%
from focksplit.baselines import pair_model_distribution
from focksplit.experiment import compare
from focksplit.quantum import BeamConfig, exact_distribution

for na, nb in [(1, 1), (25, 25), (26, 25)]:
    cfg = BeamConfig(na, nb)
    pair = pair_model_distribution(cfg)
    exact = exact_distribution(cfg)
    print(f"{(na, nb)}  pair argmax {pair.argmax()}  exact argmax {exact.argmax()}  "
          f"tvd {compare(exact, pair).tvd:.4f}")
