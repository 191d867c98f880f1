import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import eval_genlaguerre

from evoflow.errors import DomainError
from evoflow.special import (
    LaguerreParams,
    _laguerre_recurrence,
    _laguerre_sum,
    gamma_ratio,
    gaussian_even_moment,
    gaussian_exp_moment,
    laguerre,
    laguerre_generating_closed,
    laguerre_generating_sum,
    laguerre_value,
    lambda_integral,
)


def test_laguerre_degree_zero_is_one():
    assert laguerre_value(0, 0.5, 7.3) == 1.0


def test_laguerre_degree_one_closed_form():
    # L_1^a(z) = 1 + a - z
    assert laguerre_value(1, 0.5, 2.0) == pytest.approx(-0.5, rel=1e-14)


def test_laguerre_degree_two_explicit():
    assert laguerre_value(2, 0.5, -1.0) == pytest.approx(4.875, rel=1e-14)


@pytest.mark.parametrize("alpha", [-0.5, 0.0, 0.5, 1.5, 4.0])
@pytest.mark.parametrize("p", list(range(21)))
def test_sum_vs_recurrence_where_sum_is_conditioned(p, alpha):
    # For z <= 0 every term of the explicit binomial-Gamma sum is
    # positive and the two evaluation strategies agree to 1e-10 relative
    # (measured worst 2.6e-15 against 50-digit arithmetic).
    for z in np.linspace(-10.0, 0.0, 21):
        a = _laguerre_sum(p, alpha, float(z))
        b = _laguerre_recurrence(p, alpha, float(z))
        assert b == pytest.approx(a, rel=1e-10, abs=1e-12)


@pytest.mark.parametrize("alpha", [-0.5, 0.0, 0.5, 1.5, 4.0])
@pytest.mark.parametrize("p", list(range(9)))
def test_sum_vs_recurrence_low_degree_full_range(p, alpha):
    # Degrees up to 8 stay well conditioned on the whole grid (measured
    # worst 4.7e-12); this is the regime where the sum is actually used.
    for z in np.linspace(-10.0, 10.0, 41):
        a = _laguerre_sum(p, alpha, float(z))
        b = _laguerre_recurrence(p, alpha, float(z))
        assert b == pytest.approx(a, rel=1e-10, abs=1e-12)


@pytest.mark.parametrize("alpha", [-0.5, 0.0, 0.5, 1.5, 4.0])
@pytest.mark.parametrize("p", [12, 16, 20])
def test_sum_vs_recurrence_cancellation_regime(p, alpha):
    # For large degree and z > 0 the alternating sum cancels ~10 digits
    # in float64 (worst measured 9.1e-6 at p=20, alpha=4, z=8.5, where
    # the recurrence itself stays within 1e-10 of 50-digit truth). The
    # agreement bound here reflects that conditioning floor.
    for z in np.linspace(0.5, 10.0, 20):
        a = _laguerre_sum(p, alpha, float(z))
        b = _laguerre_recurrence(p, alpha, float(z))
        assert b == pytest.approx(a, rel=2e-5, abs=1e-12)


@pytest.mark.parametrize("alpha", [-0.5, 0.0, 0.5, 1.5, 4.0])
@pytest.mark.parametrize("p", [0, 1, 2, 5, 9, 14, 20, 35, 64])
def test_laguerre_against_scipy(p, alpha):
    for z in (-7.0, -1.0, 0.0, 0.3, 2.0, 9.5):
        ours = laguerre_value(p, alpha, z)
        ref = float(eval_genlaguerre(p, alpha, z))
        assert ours == pytest.approx(ref, rel=1e-9, abs=1e-11)


def test_laguerre_degree_cap():
    with pytest.raises(DomainError):
        laguerre_value(65, 0.0, 1.0)
    # the cap is configurable
    assert math.isfinite(laguerre_value(65, 0.0, 1.0, max_degree=80))


def test_laguerre_params_validation():
    with pytest.raises(DomainError):
        LaguerreParams(-1, 0.5, 0.0)
    with pytest.raises(DomainError):
        LaguerreParams(2, -1.0, 0.0)
    assert laguerre(LaguerreParams(2, 0.5, -1.0)) == pytest.approx(4.875)


def test_generating_sum_single_term():
    assert laguerre_generating_sum(0.0, 1.0, 5.0, 1) == 1.0


def test_generating_sum_z_zero():
    # closed form (1-gamma)^{-(alpha+1)} at z=0
    s = laguerre_generating_sum(0.5, -0.5, 0.0, 200)
    assert s == pytest.approx(math.sqrt(2.0), rel=1e-10)


def test_generating_sum_domain():
    with pytest.raises(DomainError):
        laguerre_generating_sum(1.0, 0.5, 0.0, 10)
    with pytest.raises(DomainError):
        laguerre_generating_sum(-1.2, 0.5, 0.0, 10)
    with pytest.raises(DomainError):
        laguerre_generating_closed(1.0, 0.5, 0.0)


def test_generating_sum_monotone_for_nonpositive_z():
    # for z <= 0 and gamma in [0,1) every term is positive, so partial
    # sums are nondecreasing in the term count
    prev = 0.0
    for terms in (1, 2, 5, 20, 80, 200):
        cur = laguerre_generating_sum(0.7, 0.5, -2.0, terms)
        assert cur >= prev
        prev = cur


@pytest.mark.parametrize("gamma", [0.1, 0.5])
@pytest.mark.parametrize("alpha", [-0.5, 0.5])
def test_generating_identity_200_terms_small_gamma(gamma, alpha):
    # at gamma <= 0.5 the series has fully converged by 200 terms over
    # z in [-5, 0]
    for z in np.linspace(-5.0, 0.0, 11):
        s = laguerre_generating_sum(gamma, alpha, float(z), 200)
        c = laguerre_generating_closed(gamma, alpha, float(z))
        assert s == pytest.approx(c, rel=1e-8)


@pytest.mark.parametrize("alpha", [-0.5, 0.5])
def test_generating_identity_200_terms_gamma_09_at_origin(alpha):
    s = laguerre_generating_sum(0.9, alpha, 0.0, 200)
    c = laguerre_generating_closed(0.9, alpha, 0.0)
    assert s == pytest.approx(c, rel=1e-8)


def test_generating_sum_gamma_09_negative_z_converges_slowly():
    # At gamma = 0.9, z = -1 the terms 0.9^p L_p^{1/2}(-1) decay only
    # after p ~ e^{2 sqrt(p)} stops winning; 200 terms leave a 2.5e-2
    # relative gap and 486 terms are needed for 1e-8. Frozen oracle
    # values (40-digit arithmetic).
    s200 = laguerre_generating_sum(0.9, 0.5, -1.0, 200)
    closed = laguerre_generating_closed(0.9, 0.5, -1.0)
    assert s200 == pytest.approx(249723.65884569890, rel=1e-11)
    assert closed == pytest.approx(256242.01282641087, rel=1e-11)
    assert abs(s200 - closed) / closed == pytest.approx(2.5438272e-2, rel=1e-6)
    s486 = laguerre_generating_sum(0.9, 0.5, -1.0, 486)
    assert abs(s486 - closed) / closed < 1e-8
    assert abs(laguerre_generating_sum(0.9, 0.5, -1.0, 485) - closed) / closed > 1e-8


def test_gaussian_even_moment_standard_normal():
    assert gaussian_even_moment(0.0, 1.0, 0) == 1.0
    assert gaussian_even_moment(0.0, 1.0, 2) == pytest.approx(3.0, rel=1e-14)
    assert gaussian_even_moment(2.0, 1.0, 1) == pytest.approx(5.0, rel=1e-14)


def _binomial_even_moment(mu: float, sigma2: float, p: int) -> float:
    # independent oracle: expand E(mu + sigma N)^{2p}, odd moments vanish,
    # E N^{2k} = (2k-1)!!
    sigma = math.sqrt(sigma2)
    total = 0.0
    for j in range(0, 2 * p + 1, 2):
        double_fact = 1.0
        for i in range(1, j, 2):
            double_fact *= i
        total += math.comb(2 * p, j) * mu ** (2 * p - j) * sigma ** j * double_fact
    return total


def test_gaussian_even_moment_vs_binomial_oracle_point():
    # E(1 + sqrt(2) N)^6 = 331 exactly
    assert _binomial_even_moment(1.0, 2.0, 3) == pytest.approx(331.0, rel=1e-14)
    assert gaussian_even_moment(1.0, 2.0, 3) == pytest.approx(331.0, rel=1e-10)


@pytest.mark.parametrize("p", list(range(9)))
def test_gaussian_even_moment_vs_binomial_oracle_grid(p):
    for mu in np.linspace(-3.0, 3.0, 7):
        for sigma2 in (0.25, 1.0, 2.5, 4.0):
            ours = gaussian_even_moment(float(mu), float(sigma2), p)
            ref = _binomial_even_moment(float(mu), float(sigma2), p)
            assert ours == pytest.approx(ref, rel=1e-10)


def test_gaussian_even_moment_domain():
    with pytest.raises(DomainError):
        gaussian_even_moment(0.0, 0.0, 2)
    with pytest.raises(DomainError):
        gaussian_even_moment(0.0, -1.0, 2)


def test_gaussian_exp_moment_values():
    assert gaussian_exp_moment(0.0, 1.0, 0.0) == 1.0
    assert gaussian_exp_moment(0.0, 1.0, 0.5) == pytest.approx(math.sqrt(2.0), rel=1e-12)
    assert gaussian_exp_moment(1.0, 0.5, 1.0) == pytest.approx(3.84423102815912, rel=1e-12)


def test_gaussian_exp_moment_divergence():
    with pytest.raises(DomainError):
        gaussian_exp_moment(0.0, 1.0, 1.0)
    with pytest.raises(DomainError):
        gaussian_exp_moment(0.0, 2.0, 0.5)


def test_gaussian_exp_moment_mc_cross_check():
    rng = np.random.default_rng(7)
    y = 1.0 + math.sqrt(0.5) * rng.standard_normal(200_000)
    est = np.exp(0.8 * y * y / 2.0).mean()
    exact = gaussian_exp_moment(1.0, 0.5, 0.8)
    assert abs(est - exact) / exact < 0.05


def test_lambda_integral_at_zero_rate():
    assert lambda_integral(0.0, 2.5) == 2.5


def test_lambda_integral_values():
    assert lambda_integral(1.0, 1.0) == pytest.approx(math.e - 1.0, rel=1e-14)
    assert lambda_integral(-4.0, 0.2) == pytest.approx(0.137667758970695, rel=1e-13)


def test_lambda_integral_continuity_at_zero():
    # Continuity at the removable singularity: the implementation must
    # track the exact function to 1e-9 absolute across the Taylor-switch
    # threshold (measured 1.5e-15), and approach t from both sides. The
    # exact function itself deviates from t by lam*t^2/2, so "equals t"
    # is only meaningful in the lam -> 0 limit.
    for lam in (-1e-7, -1e-8, -9.9e-9, -1e-12, 1e-12, 9.9e-9, 1e-8, 1e-7):
        for t in (0.1, 1.0, 5.0, 10.0):
            exact = math.expm1(lam * t) / lam
            assert abs(lambda_integral(lam, t) - exact) <= 1e-9
    assert lambda_integral(0.0, 10.0) == 10.0
    for t in (0.1, 1.0, 10.0):
        below = lambda_integral(-1e-13, t)
        above = lambda_integral(1e-13, t)
        assert abs(below - t) < 1e-10 and abs(above - t) < 1e-10


def test_lambda_integral_domain():
    with pytest.raises(DomainError):
        lambda_integral(0.5, -0.1)


@given(
    lam=st.floats(min_value=-5.0, max_value=5.0),
    t1=st.floats(min_value=0.0, max_value=10.0),
    t2=st.floats(min_value=0.0, max_value=10.0),
)
@settings(max_examples=200, deadline=None)
def test_lambda_integral_monotone_and_positive(lam, t1, t2):
    lo, hi = sorted((t1, t2))
    a, b = lambda_integral(lam, lo), lambda_integral(lam, hi)
    assert a <= b + 1e-12
    if lo > 0.0:
        assert a > 0.0


def test_gamma_ratio_values():
    assert gamma_ratio(1.5, 0) == 1.0
    assert gamma_ratio(1.5, 2) == pytest.approx(3.75, rel=1e-14)
    assert gamma_ratio(0.5, 3) == pytest.approx(1.875, rel=1e-14)


@given(
    a=st.floats(min_value=0.1, max_value=20.0),
    j=st.integers(min_value=0, max_value=30),
    k=st.integers(min_value=0, max_value=30),
)
@settings(max_examples=200, deadline=None)
def test_gamma_ratio_cocycle(a, j, k):
    lhs = gamma_ratio(a, j) * gamma_ratio(a + j, k)
    rhs = gamma_ratio(a, j + k)
    assert lhs == pytest.approx(rhs, rel=1e-12)
