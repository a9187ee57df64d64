from fractions import Fraction

import numpy as np
import pytest

from horncone.errors import DimensionMismatch, InvalidParameters, InvalidTuple
from horncone.spectra import (
    HermitianFamily,
    ProjectionConfig,
    RationalSpectra,
    _rationalize,
    chain_family,
    forward_sample,
    partial_sums,
    residual_report,
    witness_search,
)
from horncone.suites import NON_MEMBER


def test_rationalize():
    assert _rationalize(0.5) == Fraction(1, 2)
    assert _rationalize(1 / 3) == Fraction(1, 3)
    x = 0.123456789123
    assert float(_rationalize(x)) == x


def test_rational_spectra():
    r = RationalSpectra.from_lists([[2, 1], ["1/2", 0], [1, 1]])
    assert r.n == 2 and r.m == 3
    assert r.to_json() == [[2, 1], ["1/2", 0], [1, 1]]
    assert r.scaled(2).seqs[1] == (1, 0)
    with pytest.raises(InvalidTuple):
        RationalSpectra.from_lists([[0, 1], [1, 0], [1, 0]])
    f = RationalSpectra.from_floats([[0.25, 1.0], [0.0, 0.0], [1.0, 0.25]])
    assert f.seqs[0] == (1, Fraction(1, 4))


def test_family_validation():
    I = np.eye(2)
    with pytest.raises(InvalidParameters):
        HermitianFamily([I, I])
    with pytest.raises(DimensionMismatch):
        HermitianFamily([I, I, I, I], [])
    with pytest.raises(DimensionMismatch):
        HermitianFamily([I, I, np.eye(3)])


@pytest.mark.parametrize("n,m", [(1, 3), (2, 4), (3, 5), (2, 6)])
def test_forward_samples_are_consistent(n, m):
    rng = np.random.default_rng(5)
    for _ in range(10):
        fam, lam = forward_sample(n, m, rng)
        for h in fam.H + fam.B:
            assert np.allclose(h, h.conj().T)
        rep = residual_report(fam, lam)
        assert rep["max"] < 1e-9
        assert all(x > -1e-9 for x in rep["partial_sum_min_eigenvalues"])


def test_partial_sums_are_couplings():
    rng = np.random.default_rng(2)
    fam, _ = forward_sample(3, 6, rng)
    sums = partial_sums(fam.H)
    assert len(sums) == 4
    for k in range(3):
        assert np.allclose(sums[k], fam.B[k])
    assert np.allclose(sums[-1], fam.B[-1])
    assert partial_sums(fam.H[:3]) == []


def test_family_json_round_trip():
    fam, _ = forward_sample(2, 4, np.random.default_rng(0))
    back = HermitianFamily.from_json(fam.to_json())
    for a, b in zip(fam.H + fam.B, back.H + back.B):
        assert np.allclose(a, b)


def test_perturbation_sensitivity():
    rng = np.random.default_rng(3)
    fam, lam = forward_sample(2, 4, rng)
    assert residual_report(fam, lam)["max"] < 1e-9
    bumped = HermitianFamily([fam.H[0] + 1e-3 * np.eye(2)] + fam.H[1:], fam.B)
    rep = residual_report(bumped, lam)
    assert rep["spectrum_deviation"] > 5e-4 and rep["chain_residual"] > 1e-3


def test_witness_recovers_forward_sample():
    rng = np.random.default_rng(8)
    for n, m in [(1, 4), (2, 3), (2, 4)]:
        _fam, lam = forward_sample(n, m, rng)
        res = witness_search(lam, ProjectionConfig(rng_seed=1))
        assert res.success, res.best_residual
        assert residual_report(res.family, lam)["max"] <= 1e-9
        for h in res.family.H:
            assert np.allclose(h, h.conj().T)


def test_witness_fails_on_non_member():
    res = witness_search(NON_MEMBER, ProjectionConfig(max_iterations=1500, restarts=2))
    assert not res.success and res.best_residual > 0.1
    assert not res and "success" in res.to_json()


def test_config_validation():
    with pytest.raises(InvalidParameters):
        ProjectionConfig(max_iterations=0)


def test_chain_m3():
    a, b = np.diag([1.0, 0.0]), np.diag([2.0, 1.0])
    fam = chain_family(a, b, [], 3)
    assert np.allclose(fam.H[1], a + b)
