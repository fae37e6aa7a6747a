"""Acceptance criteria, one test each.

Every test prints ``ACCEPTANCE <n> PASS|FAIL: <title>``; the lines are also
repeated in the pytest terminal summary.  Run on its own with

    pytest tests/test_acceptance.py -s
"""

import functools
import math
from fractions import Fraction

import numpy as np

from focksplit.approx import envelope_crossings, envelope_curves, envelope_nodes, phi0, stirling_probability
from focksplit.baselines import (
    contrast,
    lambda0_distribution,
    pair_model_distribution,
    semiclassical_closed_form,
    semiclassical_distribution,
)
from focksplit.experiment import compare, sample
from focksplit.figures import FIGURES, figure_dataset
from focksplit.quantum import BeamConfig, amplitude, exact_distribution, exact_probability, quadrature_distribution

RESULTS = []


def criterion(number, title):
    def wrap(fn):
        @functools.wraps(fn)
        def run():
            try:
                fn()
            except BaseException:
                _report(number, "FAIL", title)
                raise
            _report(number, "PASS", title)

        return run

    return wrap


def _report(number, status, title):
    line = f"ACCEPTANCE {number:>2} {status}: {title}"
    RESULTS.append(line)
    print(line)


def _rel_close(a, b, rel, zero_abs=1e-15):
    if b == 0:
        return abs(a) <= zero_abs
    return abs(a - b) <= rel * abs(b)


@criterion(1, "even rule: odd m1 has probability exactly 0 for Na = Nb in 1..25")
def test_01_even_rule():
    for n in range(1, 26):
        cfg = BeamConfig(n, n)
        for m1 in range(1, 2 * n, 2):
            p = exact_probability(cfg, (m1, 2 * n - m1))
            assert isinstance(p, Fraction) and p == 0, (n, m1, p)


@criterion(2, "two-particle interference: exact(1,1) = {0: 1/2, 1: 0, 2: 1/2}")
def test_02_hom():
    d = exact_distribution(BeamConfig(1, 1))
    assert d.entries == {0: Fraction(1, 2), 1: Fraction(0), 2: Fraction(1, 2)}


@criterion(3, "exact distributions sum to exactly 1 for Na, Nb <= 25")
def test_03_normalization():
    for na in range(26):
        for nb in range(26):
            assert exact_distribution(BeamConfig(na, nb)).total() == 1, (na, nb)


@criterion(4, "exact sum, double quadrature and |amplitude|^2 agree pairwise to 1e-10")
def test_04_triple_oracle():
    for na, nb in [(4, 4), (4, 5), (26, 25), (26, 24), (28, 22), (44, 6)]:
        cfg = BeamConfig(na, nb)
        n = cfg.n_total
        exact = exact_distribution(cfg)
        quad = quadrature_distribution(cfg)
        for m1 in range(n + 1):
            e = float(exact[m1])
            q = quad[m1]
            a = abs(amplitude(cfg, (m1, n - m1))) ** 2
            assert _rel_close(q, e, 1e-10), (na, nb, m1, q, e)
            assert _rel_close(a, e, 1e-10), (na, nb, m1, a, e)
            assert _rel_close(a, q, 1e-10) or (e == 0 and _rel_close(q, 0.0, 0)), (na, nb, m1, a, q)


@criterion(5, "|amplitude|^2 does not depend on theta at (4,5)")
def test_05_theta_independence():
    base = BeamConfig(4, 5)
    for m1 in range(10):
        ref = abs(amplitude(base, (m1, 9 - m1))) ** 2
        for theta in (0.7, math.pi / 2, 2.1):
            value = abs(amplitude(BeamConfig(4, 5, theta), (m1, 9 - m1))) ** 2
            assert abs(value - ref) <= 1e-12, (m1, theta, value, ref)


@criterion(6, "Gaussian-fit peak phi0(17, 100) = 0.73 pi within 0.005 pi")
def test_06_phi0():
    assert abs(phi0(17, 100) - 0.73 * math.pi) <= 0.005 * math.pi


@criterion(7, "Stirling form within 10% of exact at (25,25) for even m1 in 3..47")
def test_07_stirling():
    cfg = BeamConfig(25, 25)
    worst = 0.0
    for m1 in range(4, 47, 2):
        exact = float(exact_probability(cfg, (m1, 50 - m1)))
        err = abs(stirling_probability(cfg, (m1, 50 - m1)) / exact - 1)
        worst = max(worst, err)
        assert err <= 0.10, (m1, err)
    print(f"    worst relative error {worst:.4f}")


@criterion(8, "envelope nodes of (26,24) fall in (7, 8) and (42, 43)")
def test_08_nodes():
    cfg = BeamConfig(26, 24)
    roots = sorted(50 * np.roots([8, -8, 1]).real)
    crossings = envelope_crossings(cfg)
    assert np.allclose(crossings, roots, atol=1e-9)
    env = envelope_curves(cfg)
    for x in crossings:
        assert abs(float(env.even(x)) - float(env.odd(x))) <= 1e-12
    assert envelope_nodes(cfg) == [(7, 8), (42, 43)]


@criterion(9, "zero quantum angle at (25,25) equals semiclassical N=50, r=1 (TVD <= 1e-10)")
def test_09_lambda0():
    tvd = compare(lambda0_distribution(BeamConfig(25, 25)), semiclassical_distribution(50, 1.0)).tvd
    assert tvd <= 1e-10, tvd


@criterion(10, "pair model peaks at m1 in {24, 26}; exact peaks at m1 in {0, 50}")
def test_10_model_contrast():
    cfg = BeamConfig(25, 25)
    assert set(pair_model_distribution(cfg).argmax()) <= {24, 26}
    assert set(exact_distribution(cfg).argmax()) <= {0, 50}


@criterion(11, "semiclassical closed form matches quadrature to 1e-10 at N=50")
def test_11_semiclassical_closed_form():
    for r in (1.0, contrast(44, 6)):
        closed = semiclassical_closed_form(50, r).probabilities()
        quad = semiclassical_distribution(50, r).probabilities()
        assert np.max(np.abs(closed - quad)) <= 1e-10, r


@criterion(12, "1e5 seeded shots of exact(2,2): no odd counts, frequencies within 0.01")
def test_12_sampler():
    d = exact_distribution(BeamConfig(2, 2))
    for seed in (0, 1, 12345):
        freq = sample(d, 10**5, seed).frequencies()
        assert freq[1] == 0 and freq[3] == 0
        assert np.all(np.abs(freq[[0, 2, 4]] - [3 / 8, 1 / 4, 3 / 8]) <= 0.01), freq


@criterion(13, "every figure id yields a dataset with bit-stable CSV")
def test_13_figures():
    for fig in FIGURES:
        first = figure_dataset(fig).to_csv()
        second = figure_dataset(fig).to_csv()
        assert first == second and len(first.splitlines()) > 2, fig


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            try:
                fn()
            except Exception:
                failed += 1
    sys.exit(1 if failed else 0)
