"""
Exact detector counts for two Fock inputs
=========================================

Na particles enter one port of a 50/50 beam splitter and Nb the other.
The probability of seeing m1 at detector 1 and m2 at detector 2 is a
finite alternating sum, so it can be written down as an exact fraction.
"""

# %%
from focksplit.quantum import BeamConfig, exact_distribution, exact_probability

# one particle in each port: they always leave together
hom = exact_distribution(BeamConfig(1, 1))
for m1, m2, p in hom.rows():
    print(m1, m2, p)

# %%
# With equal inputs every odd m1 has probability exactly zero.
d = exact_distribution(BeamConfig(4, 4))
print([str(d[m1]) for m1 in range(9)])
print("sum =", d.total())

# %%
# A bigger case.  The most likely outcome is that (almost) everything goes
# to one side, and the centre is comparatively unlikely.
d = exact_distribution(BeamConfig(25, 25))
print("argmax:", d.argmax())
print("P(0, 50)  =", float(d[0]))
print("P(24, 26) =", float(d[24]))
print("P(25, 25) =", exact_probability(BeamConfig(25, 25), (25, 25)))


# %%
# A crude text histogram helps when eyeballing shapes.
def bars(dist, width=60):
    probs = dist.probabilities()
    top = probs.max()
    for m1, p in enumerate(probs):
        print(f"{m1:3d} {'#' * int(round(width * p / top))}")


bars(exact_distribution(BeamConfig(26, 24)))
