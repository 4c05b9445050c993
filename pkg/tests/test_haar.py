import numpy as np
import pytest
from sympy import QQ

from app.core.exceptions import InvalidInputError
from app.models.tensors import MonomialSpec
from app.services.haar import MIN_SAMPLES, MonteCarloEstimate, haar_mc_oracle, haar_unitaries
from app.services.integrals import monomial_integral
from app.services.verification import MC_SPECS


def test_haar_samples_are_unitary():
    unitaries = haar_unitaries(3, 50, np.random.default_rng(0))
    products = unitaries @ np.conj(np.transpose(unitaries, (0, 2, 1)))
    assert np.allclose(products, np.eye(3))


def test_estimate_is_reproducible():
    spec = MonomialSpec.parse(2, "1,1", "1,1")
    first = haar_mc_oracle(spec, samples=5000, seed=11)
    second = haar_mc_oracle(spec, samples=5000, seed=11)
    assert first == second
    assert haar_mc_oracle(spec, samples=5000, seed=12).mean != first.mean


@pytest.mark.parametrize("u, ubar", [("1,1", "1,1"), ("1,1 2,2", "1,2 2,1"), ("1,1 1,2", "1,1 1,2")])
def test_estimate_agrees_with_exact_value(u, ubar):
    spec = MonomialSpec.parse(2, u, ubar)
    estimate = haar_mc_oracle(spec, samples=20000, seed=7)
    assert estimate.samples == 20000
    assert estimate.agrees_with(monomial_integral(spec))


def test_oracle_rejects_tiny_runs():
    spec = MonomialSpec.parse(2, "1,1", "1,1")
    with pytest.raises(InvalidInputError):
        haar_mc_oracle(spec, samples=MIN_SAMPLES - 1)
    with pytest.raises(InvalidInputError):
        haar_mc_oracle(spec, samples=MIN_SAMPLES, streams=0)


def test_agreement_tolerance():
    estimate = MonteCarloEstimate(mean=0.51, stderr=0.005, samples=1000)
    assert estimate.agrees_with(QQ(1, 2))
    assert not estimate.agrees_with(QQ(1, 2), sigmas=1.0)


@pytest.mark.slow
@pytest.mark.parametrize("index", range(len(MC_SPECS)))
def test_mc_specs_at_full_sample_count(index):
    d, u, ubar = MC_SPECS[index]
    spec = MonomialSpec.parse(d, u, ubar)
    assert haar_mc_oracle(spec, seed=1000 + index).agrees_with(monomial_integral(spec))
