"""Eigendecomposition contract: ordering, signs, tolerance policy, rank."""

import numpy as np
import pytest

from framegraphs.spectral import (
    DEFAULT_TOL,
    SpectralError,
    TolerancePolicy,
    group_eigenvalues,
    numeric_rank,
    sym_eig,
)


def test_tolerance_policy_validation():
    assert TolerancePolicy().tau_rel == 1e-9
    with pytest.raises(ValueError):
        TolerancePolicy(tau_rel=0.0)
    with pytest.raises(ValueError):
        TolerancePolicy(tau_rel=1e-3)
    with pytest.raises(ValueError):
        TolerancePolicy(tau_rel=-1e-9)


def test_threshold_is_relative_with_floor():
    tol = TolerancePolicy(tau_rel=1e-8)
    assert tol.threshold(0.5) == 1e-8       # floor at scale 1
    assert tol.threshold(100.0) == 1e-6
    assert tol.threshold(-100.0) == 1e-6


def test_sym_eig_reconstructs():
    rng = np.random.default_rng(7)
    a = rng.standard_normal((8, 8))
    m = a + a.T
    dec = sym_eig(m)
    assert np.all(np.diff(dec.values) >= 0)
    recon = dec.vectors @ np.diag(dec.values) @ dec.vectors.T
    assert np.max(np.abs(recon - m)) < 1e-10
    # Orthonormal eigenvectors.
    assert np.max(np.abs(dec.vectors.T @ dec.vectors - np.eye(8))) < 1e-10


def test_sym_eig_sign_convention_and_determinism():
    rng = np.random.default_rng(11)
    a = rng.standard_normal((6, 6))
    m = a + a.T
    d1, d2 = sym_eig(m), sym_eig(m.copy())
    assert np.array_equal(d1.vectors, d2.vectors)
    for j in range(6):
        col = d1.vectors[:, j]
        lead = col[np.abs(col) > DEFAULT_TOL.tau_rel][0]
        assert lead > 0


def test_sym_eig_rejects_bad_input():
    with pytest.raises(SpectralError):
        sym_eig(np.ones((2, 3)))
    with pytest.raises(SpectralError):
        sym_eig(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(SpectralError):
        sym_eig(np.array([[np.nan, 0.0], [0.0, 1.0]]))


def test_sym_eig_tolerates_tiny_asymmetry():
    m = np.eye(3)
    m[0, 1] = 1e-12
    dec = sym_eig(m)
    assert np.allclose(dec.values, 1.0)


def test_numeric_rank():
    assert numeric_rank(np.zeros((3, 3))) == 0
    assert numeric_rank(np.eye(4)) == 4
    assert numeric_rank(np.diag([1.0, 1e-15, 2.0])) == 2
    # Rank-1 outer product.
    v = np.array([1.0, 2.0, 3.0])
    assert numeric_rank(np.outer(v, v)) == 1
    # Relative: a uniform rescale must not change the rank.
    assert numeric_rank(1e6 * np.diag([1.0, 1e-12, 2.0])) == 2


def test_group_eigenvalues():
    vals = np.array([0.0, 0.0, 1.0, 1.0 + 1e-12, 3.0])
    groups = group_eigenvalues(vals)
    assert groups == [[0, 1], [2, 3], [4]]
    assert group_eigenvalues(np.array([])) == []
    assert group_eigenvalues(np.array([5.0])) == [[0]]
