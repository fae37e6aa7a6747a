"""
Simulated runs and the command line
===================================

Repeating the experiment amounts to drawing m1 from the distribution.
Draws are seeded, so the same seed always gives the same counts.  The same
things are available from the ``focksplit`` command.
"""

# %%
import subprocess
import sys

from focksplit.experiment import compare, sample
from focksplit.quantum import BeamConfig, exact_distribution

d = exact_distribution(BeamConfig(2, 2))
run = sample(d, 100_000, seed=7)
print(run.counts, run.algorithm)
print("frequencies", run.frequencies())

# %%
# The empirical distribution closes in on the source as shots grow.
d = exact_distribution(BeamConfig(25, 25))
for shots in (10**3, 10**4, 10**5, 10**6):
    print(shots, compare(d, sample(d, shots, seed=1).empirical()).tvd)

# %%
for argv in (
    ["dist", "--model", "exact", "--na", "2", "--nb", "2", "--exact-rationals"],
    ["compare", "--models", "exact", "stirling", "--na", "25", "--nb", "25"],
    ["figure", "--list"],
):
    print("$ focksplit", " ".join(argv))
    print(subprocess.run([sys.executable, "-m", "focksplit", *argv], capture_output=True, text=True).stdout)
