import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from haarwalk import (EntropyRecord, RngSeed, basis_state, entropic_uncertainty,
                      haar_mean_entropy, ks_critical_value, ks_statistic,
                      porter_thomas_cdf, porter_thomas_fit, porter_thomas_pdf,
                      probabilities_of, sample_haar_state, shannon_entropy,
                      uniform_state)
from haarwalk.entropy import EULER_GAMMA

SEED = RngSeed(271828)


def pt_inverse_cdf_sample(dim, size, rng):
    """Oracle sampler: exact inverse-CDF draws from (N-1)(1-p)^(N-2)."""
    u = rng.uniform(size=size)
    return 1.0 - (1.0 - u) ** (1.0 / (dim - 1))


# ---------------------------------------------------------------------------
# probabilities


def test_probabilities_of_basis_state():
    p = probabilities_of(basis_state(8, 3))
    assert p[3] == 1.0
    assert np.all(np.delete(p, 3) == 0.0)


def test_probabilities_of_uniform_state_dim_20():
    p = probabilities_of(uniform_state(20))
    assert np.abs(p - 0.05).max() < 1e-15


def test_probabilities_sum_to_one():
    p = probabilities_of(sample_haar_state(100, SEED))
    assert abs(p.sum() - 1.0) < 1e-12


def test_probabilities_reject_unnormalized_state():
    with pytest.raises(ValueError):
        probabilities_of(np.array([1.0, 0.5], dtype=complex))


# ---------------------------------------------------------------------------
# shannon entropy


def test_entropy_of_uniform_is_log_n():
    assert abs(shannon_entropy(np.full(20, 0.05)) - math.log(20)) < 1e-12


def test_entropy_of_basis_state_is_zero():
    assert shannon_entropy(probabilities_of(basis_state(16, 5))) == 0.0


def test_entropy_of_fair_coin():
    p = np.zeros(8)
    p[0] = p[5] = 0.5
    assert abs(shannon_entropy(p) - math.log(2)) < 1e-15


def test_entropy_input_validation():
    with pytest.raises(ValueError):
        shannon_entropy(np.array([0.5, 0.4]))
    with pytest.raises(ValueError):
        shannon_entropy(np.array([1.5, -0.5]))


@given(st.integers(0, 10_000), st.integers(2, 64))
@settings(max_examples=40, deadline=None)
def test_entropy_permutation_invariant_and_maximized_at_uniform(seed, dim):
    rng = np.random.default_rng(seed)
    p = rng.dirichlet(np.ones(dim))
    h = shannon_entropy(p)
    assert abs(h - shannon_entropy(rng.permutation(p))) < 1e-12
    assert h <= math.log(dim) + 1e-12


# ---------------------------------------------------------------------------
# haar mean entropy reference


def test_haar_mean_entropy_formula_values():
    # ln N - 1 + gamma; at N = 4096 this is the quoted 7.8949
    assert abs(haar_mean_entropy(10) - (math.log(10) - 1 + EULER_GAMMA)) < 1e-15
    assert abs(haar_mean_entropy(20) - 2.5729479384) < 1e-9
    assert abs(haar_mean_entropy(4096) - 7.8949) < 1e-4
    with pytest.raises(ValueError):
        haar_mean_entropy(1)


def test_haar_entropy_monte_carlo_matches_formula_at_large_n():
    # Invariant: T = 200 trials at N = 256 land within 5 standard errors.
    dim, trials = 256, 200
    hs = np.array([shannon_entropy(probabilities_of(sample_haar_state(dim, SEED.child(k))))
                   for k in range(trials)])
    se = hs.std(ddof=1) / np.sqrt(trials)
    assert abs(hs.mean() - haar_mean_entropy(dim)) < 5 * se


def test_haar_entropy_exact_small_n_mean_is_harmonic_minus_one():
    # At small N the exact mean is H_N - 1 (harmonic number minus one),
    # which exceeds ln N - 1 + gamma by about 1/(2N); a 2000-sample mean
    # resolves the exact value but not the asymptotic formula at N = 10.
    dim, trials = 10, 2000
    hs = np.array([shannon_entropy(probabilities_of(sample_haar_state(dim, SEED.child(k))))
                   for k in range(trials)])
    exact = np.sum(1.0 / np.arange(1, dim + 1)) - 1.0
    se = hs.std(ddof=1) / np.sqrt(trials)
    assert abs(hs.mean() - exact) < 5 * se
    assert exact - haar_mean_entropy(dim) > 5 * se  # the asymptotic bias is resolvable


# ---------------------------------------------------------------------------
# porter-thomas density and fit


def test_pdf_boundary_values():
    assert porter_thomas_pdf(0.0, 50) == 49.0
    assert porter_thomas_pdf(1.0, 50) == 0.0
    with pytest.raises(ValueError):
        porter_thomas_pdf(1.5, 50)
    with pytest.raises(ValueError):
        porter_thomas_pdf(-0.1, 50)


@pytest.mark.parametrize("dim", [16, 64, 256])
def test_pdf_mean_is_one_over_n(dim):
    mean, _ = quad(lambda p: p * porter_thomas_pdf(p, dim), 0.0, 1.0, limit=200)
    assert abs(mean - 1.0 / dim) < 1e-9


def test_pdf_normalizes(dim=128):
    mass, err = quad(lambda p: porter_thomas_pdf(p, dim), 0.0, 1.0)
    assert abs(mass - 1.0) < 1e-9


def test_cdf_matches_pdf_derivative_relation():
    dim = 40
    grid = np.linspace(0, 1, 7)
    for a, b in zip(grid, grid[1:]):
        mass, _ = quad(lambda p: porter_thomas_pdf(p, dim), a, b)
        assert abs(mass - (porter_thomas_cdf(b, dim) - porter_thomas_cdf(a, dim))) < 1e-9


def test_fit_accepts_oracle_samples():
    # Inverse-CDF oracle draws are exactly chi-square distributed, so the
    # KS fit should pass the 5% critical value in >= 90% of trials.
    dim, runs = 256, 50
    rng = np.random.default_rng(17)
    crit = ks_critical_value(dim)
    passes = 0
    for _ in range(runs):
        sample = pt_inverse_cdf_sample(dim, dim, rng)
        stat = ks_statistic(sample, lambda x: porter_thomas_cdf(x, dim))
        passes += stat < crit
    assert passes / runs >= 0.9


def test_fit_flags_the_uniform_vector():
    for dim in (20, 256):
        stat = porter_thomas_fit(np.full(dim, 1.0 / dim))
        # the empirical CDF jumps 0 -> 1 at 1/N, so the statistic equals the
        # larger boundary gap of the reference CDF there
        f = porter_thomas_cdf(1.0 / dim, dim)
        assert abs(stat - max(f, 1.0 - f)) < 1e-12
        assert stat > 0.5


def test_fit_handles_degenerate_vector():
    p = np.zeros(64)
    p[11] = 1.0
    stat = porter_thomas_fit(p)
    assert stat > 0.9


def test_fit_passes_for_haar_states_like_the_oracle():
    dim, runs = 256, 50
    crit = ks_critical_value(dim)
    rng = np.random.default_rng(23)
    haar_pass = np.mean([
        porter_thomas_fit(probabilities_of(sample_haar_state(dim, SEED.child(k)))) < crit
        for k in range(runs)])
    oracle_pass = np.mean([
        ks_statistic(pt_inverse_cdf_sample(dim, dim, rng),
                     lambda x: porter_thomas_cdf(x, dim)) < crit
        for _ in range(runs)])
    assert haar_pass >= 0.9
    assert oracle_pass >= 0.9
    assert abs(haar_pass - oracle_pass) <= 0.15


def test_ks_critical_value_formula():
    assert abs(ks_critical_value(256) - math.sqrt(-math.log(0.025) / 512)) < 1e-15
    with pytest.raises(ValueError):
        ks_critical_value(0)
    with pytest.raises(ValueError):
        ks_critical_value(10, alpha=1.5)


# ---------------------------------------------------------------------------
# entropic uncertainty


def test_uniform_state_record():
    dim = 64
    rec = entropic_uncertainty(uniform_state(dim))
    assert abs(rec.h_computational - math.log(dim)) < 1e-10
    assert abs(rec.h_qft) < 1e-10
    assert abs(rec.uncertainty_sum - math.log(dim)) < 1e-10
    assert rec.bound == math.log(dim)


def test_basis_state_record():
    dim = 64
    rec = entropic_uncertainty(basis_state(dim, 9))
    assert abs(rec.h_computational) < 1e-10
    assert abs(rec.h_qft - math.log(dim)) < 1e-10


def test_record_sum_is_exact():
    rec = entropic_uncertainty(sample_haar_state(128, SEED))
    assert rec.uncertainty_sum == rec.h_computational + rec.h_qft
    assert isinstance(rec, EntropyRecord)


def test_haar_states_balance_the_two_entropies():
    # N = 1024: both basis entropies sit near ln N - 1 + gamma on average.
    dim, trials = 1024, 100
    ref = haar_mean_entropy(dim)
    recs = [entropic_uncertainty(sample_haar_state(dim, SEED.child(k)))
            for k in range(trials)]
    hp = np.array([r.h_computational for r in recs])
    hq = np.array([r.h_qft for r in recs])
    assert abs(hp.mean() - ref) < 0.1
    assert abs(hq.mean() - ref) < 0.1
    assert np.mean(np.abs(hp - hq)) < 0.1


def test_mean_entropy_difference_is_small_at_256():
    dim, trials = 256, 150
    recs = [entropic_uncertainty(sample_haar_state(dim, SEED.child(k)))
            for k in range(trials)]
    diffs = np.abs([r.h_computational - r.h_qft for r in recs])
    assert np.mean(diffs) < 0.1


@given(st.integers(0, 100_000))
@settings(max_examples=40, deadline=None)
def test_uncertainty_bound_holds_for_random_states(seed):
    rng = np.random.default_rng(seed)
    dim = int(rng.integers(2, 200))
    style = rng.integers(3)
    if style == 0:
        state = sample_haar_state(dim, RngSeed(seed))
    elif style == 1:
        state = basis_state(dim, int(rng.integers(dim)))
    else:  # spiky superposition of two basis states
        state = np.zeros(dim, dtype=complex)
        i, j = rng.choice(dim, size=2, replace=False)
        state[i], state[j] = np.sqrt(0.9), np.sqrt(0.1) * np.exp(1j * rng.uniform(0, 2 * np.pi))
    rec = entropic_uncertainty(state)
    assert rec.uncertainty_sum >= math.log(dim) - 1e-9
