import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate, stats

from focksplit.baselines import (
    ClassicalWaveParams,
    CoherentParams,
    classical_distribution,
    classical_pdf,
    coherent_distribution,
    contrast,
    lambda0_closed_form,
    lambda0_distribution,
    pair_model_distribution,
    semiclassical_closed_form,
    semiclassical_distribution,
)
from focksplit.experiment import compare
from focksplit.quantum import BeamConfig, exact_distribution

R_44_6 = contrast(44, 6)


def test_contrast_values():
    assert contrast(1, 1) == 1.0
    assert contrast(5, 0) == 0.0
    # 2 sqrt(264) / 50
    assert R_44_6 == pytest.approx(math.sqrt(264) / 25, rel=1e-15)
    assert ClassicalWaveParams(44, 6).r == pytest.approx(R_44_6, rel=1e-15)
    with pytest.raises(ValueError):
        contrast(0, 0)


def test_classical_pdf_examples():
    p = ClassicalWaveParams(2.0, 2.0)
    assert p.support == (0.0, 4.0)
    assert classical_pdf(2.0, p) == pytest.approx(1 / (math.pi * 2.0), rel=1e-15)
    assert classical_pdf(5.0, p) == 0.0
    assert classical_pdf(-0.1, p) == 0.0
    with pytest.raises(ValueError):
        classical_pdf(4.0, p)
    with pytest.raises(ValueError):
        ClassicalWaveParams(0.0, 1.0)


@pytest.mark.parametrize("ia, ib", [(1.0, 1.0), (44.0, 6.0), (3.0, 0.5), (1.0, 2.5)])
def test_classical_pdf_normalised(ia, ib):
    p = ClassicalWaveParams(ia, ib)
    lo, hi = p.support
    # adaptive quadrature never samples the singular endpoints themselves
    value, _ = integrate.quad(classical_pdf, lo, hi, args=(p,), limit=200)
    assert value == pytest.approx(1.0, abs=1e-6)


@given(st.floats(0.1, 10), st.floats(0.0, 0.999))
def test_classical_pdf_symmetric_for_equal_beams(i0, u):
    p = ClassicalWaveParams(i0, i0)
    centre = (p.i_alpha + p.i_beta) / 2
    d = u * centre
    assert classical_pdf(centre + d, p) == pytest.approx(classical_pdf(centre - d, p), rel=1e-12)


def test_classical_distribution_shape():
    d = classical_distribution(50, 1.0)
    assert math.isclose(d.total(), 1.0, abs_tol=1e-12)
    probs = d.probabilities()
    assert np.argmin(probs) == 25 and set(d.argmax()) <= {0, 50}
    assert probs[0] == pytest.approx(probs[50], rel=1e-12)
    step = classical_distribution(10, 0.0)
    assert step.entries[5] == 1.0 and step.total() == 1.0


def test_semiclassical_examples():
    d1 = semiclassical_distribution(1, 1.0)
    assert d1[0] == pytest.approx(0.5, rel=1e-15) and d1[1] == pytest.approx(0.5, rel=1e-15)
    d = semiclassical_distribution(50, 1.0)
    probs = d.probabilities()
    assert int(np.argmin(probs)) == 25
    assert set(d.argmax()) <= {0, 50}
    assert np.all(np.diff(probs[:26]) < 0)
    skew = semiclassical_distribution(50, R_44_6).probabilities()
    assert skew[0] < 1e-5 and skew[50] < 1e-5
    # mass moves off the edges onto the interference range 50 * (1 -/+ r) / 2 = 8.2 .. 41.8
    assert skew[5:46].sum() > 0.98 > 0.7 > probs[5:46].sum()


@settings(max_examples=30, deadline=None)
@given(n=st.integers(0, 50), r=st.sampled_from([0.0, 0.2, R_44_6, 1.0]))
def test_semiclassical_closed_form_matches_quadrature(n, r):
    quad = semiclassical_distribution(n, r)
    closed = semiclassical_closed_form(n, r)
    assert math.isclose(quad.total(), 1.0, abs_tol=1e-12)
    np.testing.assert_allclose(closed.probabilities(), quad.probabilities(), rtol=0, atol=1e-10)


def test_semiclassical_zero_contrast_is_binomial():
    d = semiclassical_distribution(12, 0.0)
    np.testing.assert_allclose(d.probabilities(), stats.binom.pmf(np.arange(13), 12, 0.5), rtol=1e-13)


def test_coherent_equal_beams():
    params = CoherentParams.from_intensities(3.0, 3.0)
    assert params.output_means == pytest.approx((3.0, 3.0), rel=1e-15)
    assert params.relative_phase == 0.0


def test_coherent_fixed_phase_marginal_is_poisson():
    params = CoherentParams.from_intensities(4.0, 1.0, phase=0.6)
    joint = coherent_distribution(params)
    mu1, mu2 = params.output_means
    k = np.arange(joint.cutoff + 1)
    np.testing.assert_allclose(joint.marginal(1), stats.poisson.pmf(k, mu1) * stats.poisson.cdf(joint.cutoff, mu2),
                               rtol=1e-12)
    assert mu1 + mu2 == pytest.approx(5.0)
    assert joint.total() >= 1 - 1e-12


@pytest.mark.parametrize("averaged", [False, True])
def test_coherent_truncation_mass(averaged):
    joint = coherent_distribution(CoherentParams.from_intensities(6.0, 2.0), averaged)
    assert 1 - 1e-12 <= joint.total() <= 1 + 1e-12


@pytest.mark.parametrize("n", [1, 4, 10])
def test_phase_averaged_coherent_conditional_is_semiclassical(n):
    joint = coherent_distribution(CoherentParams.from_intensities(5.0, 5.0), phase_averaged=True)
    cond = joint.conditional(n)
    np.testing.assert_allclose(cond.probabilities(), semiclassical_distribution(n, 1.0).probabilities(), atol=1e-12)
    # total-count factor: P(m1, m2) = Pois(N; Ia + Ib) * semiclassical(N)
    diag = np.array([joint.probs[m1, n - m1] for m1 in range(n + 1)])
    np.testing.assert_allclose(diag, stats.poisson.pmf(n, 10.0) * cond.probabilities(), rtol=1e-10)


def test_coherent_conditional_beyond_cutoff():
    joint = coherent_distribution(CoherentParams.from_intensities(1.0, 1.0))
    with pytest.raises(ValueError):
        joint.conditional(joint.cutoff + 1)


def test_lambda0_examples():
    assert lambda0_distribution(BeamConfig(0, 0)).entries == {0: 1.0}
    assert lambda0_distribution(BeamConfig(4, 4))[1] > 0
    d = lambda0_distribution(BeamConfig(25, 25))
    assert compare(d, semiclassical_distribution(50, 1.0)).tvd <= 1e-10
    assert all(v > 0 for v in d.entries.values())


@pytest.mark.parametrize("na, nb", [(1, 1), (2, 0), (1, 2), (25, 25), (26, 24)])
def test_lambda0_literal_closed_form(na, nb):
    cfg = BeamConfig(na, nb)
    literal = lambda0_closed_form(cfg)
    assert literal.total() == 1
    assert len(literal.meta["deviation"]) == cfg.n_total + 1
    assert literal.meta["max_abs_deviation"] <= 1e-12


def _pair_by_convolution(na, nb):
    # each pair lands as 0 or 2 at detector 1; unpaired particles split binomially
    big, small = max(na, nb), min(na, nb)
    dist = np.array([1.0])
    for _ in range(small):
        dist = np.convolve(dist, [0.5, 0.0, 0.5])
    for _ in range(big - small):
        dist = np.convolve(dist, [0.5, 0.5])
    return dist


def test_pair_examples():
    d = pair_model_distribution(BeamConfig(1, 1))
    assert d.entries == {0: Fraction(1, 2), 1: 0, 2: Fraction(1, 2)}
    d = pair_model_distribution(BeamConfig(25, 25))
    assert d.argmax() == [24, 26]
    assert d[0] == min(v for v in d.entries.values() if v)


@pytest.mark.parametrize("na, nb", [(3, 1), (1, 3), (5, 5), (6, 2), (26, 25), (7, 0)])
def test_pair_matches_convolution(na, nb):
    d = pair_model_distribution(BeamConfig(na, nb))
    assert d.total() == 1
    np.testing.assert_allclose(d.probabilities(), _pair_by_convolution(na, nb), rtol=1e-13, atol=1e-300)


@pytest.mark.parametrize("n", range(1, 26))
def test_pair_equal_support_is_even(n):
    d = pair_model_distribution(BeamConfig(n, n))
    assert {m for m, v in d.entries.items() if v} == set(range(0, 2 * n + 1, 2))
    assert all(abs(m - n) <= 1 for m in d.argmax())
    assert set(exact_distribution(BeamConfig(n, n)).argmax()) == {0, 2 * n}


# tvd(exact, pair), computed once from the two models
PAIR_TVD = {(25, 25): 0.7003130736173091, (26, 25): 0.7039884384929529}


@pytest.mark.parametrize("key", list(PAIR_TVD))
def test_pair_versus_exact_fixture(key):
    cfg = BeamConfig(*key)
    tvd = compare(exact_distribution(cfg), pair_model_distribution(cfg)).tvd
    assert tvd == pytest.approx(PAIR_TVD[key], rel=1e-12)


@settings(max_examples=40, deadline=None)
@given(na=st.integers(0, 20), nb=st.integers(0, 20))
def test_baseline_distributions_normalised(na, nb):
    cfg = BeamConfig(na, nb)
    n = cfg.n_total
    assert abs(lambda0_distribution(cfg).total() - 1) <= 1e-12
    assert pair_model_distribution(cfg).total() == 1
    if n:
        r = contrast(na, nb)
        assert abs(semiclassical_distribution(n, r).total() - 1) <= 1e-12
        assert abs(classical_distribution(n, r).total() - 1) <= 1e-12
