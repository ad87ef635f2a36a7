"""Frames and frame-level predicates and transforms.

A frame is held by its d x n synthesis matrix whose columns are the frame
vectors.  Tightness tests, the Gram-pattern graph, Naimark complements,
vector duplication, and erasure robustness / reconstruction live here.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, duplicate_vertex
from .spectral import DEFAULT_TOL, TolerancePolicy, numeric_rank, sym_eig


class FrameError(ValueError):
    pass


class ToleranceInconsistencyError(FrameError):
    """The S-based Parseval test and the G^2 = G test disagree."""


class BorderlineEntryWarning(UserWarning):
    """A Gram entry sits close to the zero threshold; the pattern is fragile."""


@dataclass(frozen=True)
class Frame:
    """Frame for R^d given by its synthesis matrix (columns = frame vectors)."""

    synthesis: np.ndarray

    def __post_init__(self):
        mat = np.asarray(self.synthesis, dtype=float)
        if mat.ndim != 2 or mat.shape[0] < 1 or mat.shape[1] < 1:
            raise FrameError(f"synthesis matrix must be 2-d, got shape {mat.shape}")
        if not np.all(np.isfinite(mat)):
            raise FrameError("synthesis matrix has non-finite entries")
        object.__setattr__(self, "synthesis", mat)
        if numeric_rank(mat @ mat.T) != self.d:
            raise FrameError("columns do not span the space: not a frame")

    @property
    def d(self) -> int:
        return self.synthesis.shape[0]

    @property
    def n(self) -> int:
        return self.synthesis.shape[1]

    def column(self, i: int) -> np.ndarray:
        return self.synthesis[:, i]


@dataclass(frozen=True)
class FrameBounds:
    """Optimal frame bounds: extreme eigenvalues of the frame operator."""

    lower: float
    upper: float


@dataclass(frozen=True)
class Tightness:
    kind: str  # "parseval" | "tight" | "not_tight"
    lower: float
    upper: float


@dataclass(frozen=True)
class GramPattern:
    """Off-diagonal support of the Gramian, read as a graph."""

    graph: Graph


def frame_operator(f: Frame) -> np.ndarray:
    return f.synthesis @ f.synthesis.T


def gramian(f: Frame) -> np.ndarray:
    return f.synthesis.T @ f.synthesis


def frame_bounds(f: Frame) -> FrameBounds:
    values = sym_eig(frame_operator(f)).values
    return FrameBounds(lower=float(values[0]), upper=float(values[-1]))


def tightness(f: Frame, tol: TolerancePolicy = DEFAULT_TOL) -> Tightness:
    """Classify the frame as Parseval, tight, or not tight.

    The Parseval verdict from the frame operator is cross-checked against
    the Gramian projection identity G^2 = G; disagreement within the same
    tolerance is reported as an internal inconsistency, not resolved
    silently.
    """
    bounds = frame_bounds(f)
    a, b = bounds.lower, bounds.upper
    is_tight = b - a <= tol.threshold(b)
    s_parseval = is_tight and abs(b - 1.0) <= tol.tau_rel
    g = gramian(f)
    g_parseval = np.max(np.abs(g @ g - g)) <= tol.tau_rel * f.n
    if s_parseval != g_parseval:
        raise ToleranceInconsistencyError(
            f"frame-operator test says parseval={s_parseval} but "
            f"Gramian projection test says parseval={g_parseval}"
        )
    if s_parseval:
        return Tightness("parseval", a, b)
    if is_tight:
        return Tightness("tight", a, b)
    return Tightness("not_tight", a, b)


def rescale_to_parseval(f: Frame, tol: TolerancePolicy = DEFAULT_TOL) -> Frame:
    """Divide by sqrt(B); requires a tight frame.  The Gram pattern is unchanged."""
    t = tightness(f, tol)
    if t.kind == "parseval":
        return f
    if t.kind != "tight":
        raise FrameError(f"frame is not tight (bounds {t.lower}, {t.upper})")
    return Frame(f.synthesis / np.sqrt(t.upper))


def associated_graph(f: Frame, tol: TolerancePolicy = DEFAULT_TOL) -> GramPattern:
    """Graph on n vertices with an edge where the Gram entry is nonzero.

    Entries within a decade of the zero threshold trigger a
    BorderlineEntryWarning: the discrete pattern extracted from floats is
    fragile there.
    """
    g = gramian(f)
    thr = tol.threshold(np.max(np.abs(g)))
    edges = []
    for i in range(f.n):
        for j in range(i + 1, f.n):
            mag = abs(g[i, j])
            if thr / 10 < mag < thr * 10:
                warnings.warn(
                    f"Gram entry ({i}, {j}) = {g[i, j]:.3e} is within a decade "
                    f"of the zero threshold {thr:.3e}",
                    BorderlineEntryWarning,
                    stacklevel=2,
                )
            if mag > thr:
                edges.append((i, j))
    return GramPattern(graph=Graph.from_edges(f.n, edges))


def represents(f: Frame, g: Graph, tol: TolerancePolicy = DEFAULT_TOL) -> bool:
    """True iff the Gram pattern equals g as a labeled graph."""
    return associated_graph(f, tol).graph == g


def naimark_complement(f: Frame, tol: TolerancePolicy = DEFAULT_TOL) -> Frame:
    """The (n-d) x n Parseval frame whose Gramian is I - G.

    Rows are the eigenvectors of G for eigenvalue 0; requires a Parseval
    frame with d < n.
    """
    t = tightness(f, tol)
    if t.kind != "parseval":
        raise FrameError("Naimark complement needs a Parseval frame")
    if f.d >= f.n:
        raise FrameError("Gramian has full rank (d = n): complement is empty")
    dec = sym_eig(gramian(f), tol)
    thr = tol.threshold(dec.values[-1])
    zero_cols = np.flatnonzero(np.abs(dec.values) <= thr)
    if zero_cols.size != f.n - f.d:
        raise FrameError(
            f"expected {f.n - f.d} zero Gram eigenvalues, found {zero_cols.size}"
        )
    return Frame(dec.vectors[:, zero_cols].T)


def duplicate_vector(f: Frame, i: int) -> Frame:
    """Split column i into two copies scaled by 1/sqrt(2).

    The frame operator is unchanged (up to rounding), and the Gram pattern maps to
    duplicate_vertex(pattern, i): the new column (appended last) has
    nonzero inner product exactly with column i and its former neighbors.
    """
    if not 0 <= i < f.n:
        raise FrameError(f"column index {i} out of range")
    col = f.column(i)
    if not np.any(col):
        raise FrameError(f"column {i} is zero and cannot be duplicated")
    scaled = col / np.sqrt(2.0)
    mat = f.synthesis.copy()
    mat[:, i] = scaled
    return Frame(np.column_stack([mat, scaled]))


def duplicated_pattern(g: Graph, i: int) -> Graph:
    """Graph-side image of duplicate_vector: duplicate vertex i."""
    return duplicate_vertex(g, i)


def erasure_robustness(f: Frame, e: int, tol: TolerancePolicy = DEFAULT_TOL) -> bool:
    """True iff every subset of n - e columns still spans R^d."""
    if not 0 <= e < f.n:
        raise FrameError("erasure count must satisfy 0 <= e < n")
    if e == 0:
        return True
    for erased in itertools.combinations(range(f.n), e):
        keep = [j for j in range(f.n) if j not in erased]
        sub = f.synthesis[:, keep]
        if numeric_rank(sub @ sub.T, tol) < f.d:
            return False
    return True


def reconstruct(
    f: Frame,
    coefficients,
    erased=(),
    tol: TolerancePolicy = DEFAULT_TOL,
) -> np.ndarray:
    """Recover x from inner products <x, f_i>, ignoring erased columns.

    Uses the inverse frame operator of the surviving columns:
    x = sum_i c_i * S~^{-1} f_i over the survivors.
    """
    coeffs = np.asarray(coefficients, dtype=float)
    if coeffs.shape != (f.n,):
        raise FrameError(f"need {f.n} coefficients, got shape {coeffs.shape}")
    erased = set(erased)
    keep = [j for j in range(f.n) if j not in erased]
    sub = f.synthesis[:, keep]
    s_sub = sub @ sub.T
    if numeric_rank(s_sub, tol) < f.d:
        raise FrameError("surviving columns do not span the space")
    return np.linalg.solve(s_sub, sub @ coeffs[keep])
