"""Dense symmetric eigendecomposition and tolerance-aware numeric rank.

LAPACK (via numpy.linalg.eigh) does the heavy lifting; this module pins
down the contract every consumer relies on: ascending eigenvalues, a
deterministic sign convention for eigenvectors, and a single relative
tolerance policy for all zero/nonzero decisions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class SpectralError(ValueError):
    pass


@dataclass(frozen=True)
class TolerancePolicy:
    """Relative zero threshold used for all pattern and rank decisions."""

    tau_rel: float = 1e-9

    def __post_init__(self):
        if not 0 < self.tau_rel < 1e-3:
            raise ValueError("tau_rel must lie in (0, 1e-3)")

    def threshold(self, scale: float) -> float:
        return self.tau_rel * max(1.0, abs(scale))


DEFAULT_TOL = TolerancePolicy()


@dataclass(frozen=True)
class EigDecomp:
    """Ascending eigenvalues and orthonormal column eigenvectors."""

    values: np.ndarray
    vectors: np.ndarray


def _check_symmetric(m: np.ndarray, tol: TolerancePolicy) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise SpectralError(f"matrix must be square, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise SpectralError("matrix has non-finite entries")
    scale = np.max(np.abs(m)) if m.size else 0.0
    if np.max(np.abs(m - m.T)) > tol.threshold(scale):
        raise SpectralError("matrix is not symmetric within tolerance")
    return (m + m.T) / 2.0


def sym_eig(m: np.ndarray, tol: TolerancePolicy = DEFAULT_TOL) -> EigDecomp:
    """Eigendecomposition of a symmetric matrix.

    Deterministic for identical input: eigenvalues ascending, and in each
    eigenvector the first entry of magnitude above the tolerance is made
    positive.
    """
    sym = _check_symmetric(m, tol)
    try:
        values, vectors = np.linalg.eigh(sym)
    except np.linalg.LinAlgError as exc:
        raise SpectralError(f"eigendecomposition failed: {exc}") from exc
    vectors = vectors.copy()
    for j in range(vectors.shape[1]):
        col = vectors[:, j]
        big = np.flatnonzero(np.abs(col) > tol.tau_rel)
        if big.size and col[big[0]] < 0:
            vectors[:, j] = -col
    return EigDecomp(values=values, vectors=vectors)


def numeric_rank(m: np.ndarray, tol: TolerancePolicy = DEFAULT_TOL) -> int:
    """Number of eigenvalues with |lambda| > tau_rel * max(1, lambda_max)."""
    dec = sym_eig(m, tol)
    lam_max = np.max(np.abs(dec.values)) if dec.values.size else 0.0
    return int(np.sum(np.abs(dec.values) > tol.threshold(lam_max)))


def group_eigenvalues(values: np.ndarray, tol: TolerancePolicy = DEFAULT_TOL) -> list[list[int]]:
    """Indices of eigenvalues grouped into multiplicity classes.

    Consecutive (ascending) eigenvalues within the relative tolerance of
    each other land in the same group.
    """
    values = np.asarray(values, dtype=float)
    if values.size == 0:
        return []
    lam_max = np.max(np.abs(values))
    thr = tol.threshold(lam_max)
    groups = [[0]]
    for i in range(1, values.size):
        if values[i] - values[groups[-1][-1]] <= thr:
            groups[-1].append(i)
        else:
            groups.append([i])
    return groups
