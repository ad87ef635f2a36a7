"""Explicit frame constructions for graph families.

Includes the Laplacian-eigenbasis frame for a root graph's line graph, the
two tight frames for the line graph of a complete graph (dimensions n-1
and n-2), the star-based Parseval frames for K_n, the K_2 x K_n product
frame, tight completions (minimal and generic two-step), and the
vertex-duplication chain starting from the diamond frame.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import graphs
from .frames import Frame, FrameError, duplicate_vector, tightness
from .graphs import Graph, GraphError, is_connected
from .linegraph import laplacian, oriented_incidence
from .spectral import DEFAULT_TOL, TolerancePolicy, group_eigenvalues, sym_eig


@dataclass(frozen=True)
class CompletionResult:
    """A frame extended to a tight frame: original columns plus `added`."""

    frame: Frame
    added: tuple[np.ndarray, ...]
    bound: float


# ---------------------------------------------------------------------------
# Laplacian-based frames
# ---------------------------------------------------------------------------

def laplacian_method(p: Graph) -> Frame:
    """Frame F = X^T B for the line graph of a connected root graph p.

    X holds the Laplacian eigenvectors for the n-1 largest eigenvalues, B
    is the oriented incidence matrix; the Gram pattern of F is the line
    graph of p and the frame-operator spectrum is the nonzero Laplacian
    spectrum.
    """
    if p.m < 1:
        raise GraphError("root graph needs at least one edge")
    if not is_connected(p):
        raise GraphError("Laplacian method needs a connected root graph")
    dec = sym_eig(laplacian(p))
    x = dec.vectors[:, 1:]  # drop the eigenvalue-0 (all-ones) eigenvector
    b = oriented_incidence(p).matrix
    return Frame(x.T @ b)


def lkn_small_frame(n: int) -> Frame:
    """Tight frame for the line graph of K_n in dimension n-2.

    Built from the (n-1) x n(n-1)/2 block matrix [C D] with
    C = I - J/(n-1) and D the oriented incidence matrix of K_{n-1};
    column order is the n-1 columns of C first, then the edges of K_{n-1}.
    """
    if n < 3:
        raise GraphError("lkn_small_frame needs n >= 3")
    k = n - 1
    c = np.eye(k) - np.ones((k, k)) / k
    d = oriented_incidence(graphs.complete(k)).matrix
    m = np.hstack([c, d])
    dec = sym_eig(m @ m.T)
    x = dec.vectors[:, 1:]  # eigenvalue-n eigenspace (the top n-2)
    return Frame(x.T @ m)


def lkn_small_column_edges(n: int) -> tuple[tuple[int, int], ...]:
    """Edge of K_n represented by each column of lkn_small_frame(n).

    Column i < n-1 is the edge {i, n-1}; the remaining columns are the
    edges of K_{n-1} in canonical order.
    """
    first = tuple((i, n - 1) for i in range(n - 1))
    return first + graphs.complete(n - 1).edges


def star_frame(n: int, d: int, keep=None) -> Frame:
    """Parseval frame for K_n in dimension d, from the star-graph Laplacian.

    The (n+1) x (n-1) eigenvector matrix for the eigenvalue-1 eigenspace
    of the star Laplacian has column k (1-based) equal to
    sqrt((n-k)/(n-k+1)) at row k+1 and -sqrt((n-k)/(n-k+1))/(n-k) at rows
    k+2..n+1.  Keeping d of its columns (column 1 always kept; default is
    alternating columns, which avoids repeated identical frame vectors)
    and applying the star's incidence matrix yields the frame.
    """
    if n < 2 or not 1 <= d <= n - 1:
        raise GraphError("star_frame needs n >= 2 and 1 <= d <= n - 1")
    if keep is None:
        keep = default_star_keep(n, d)
    keep = sorted(set(int(k) for k in keep))
    if len(keep) != d or 1 not in keep or keep[0] < 1 or keep[-1] > n - 1:
        raise GraphError(
            "keep set must be d distinct columns in 1..n-1 and contain column 1"
        )
    xt = np.zeros((n + 1, n - 1))
    for k in range(1, n):
        head = np.sqrt((n - k) / (n - k + 1))
        xt[k, k - 1] = head
        xt[k + 1:, k - 1] = -head / (n - k)
    b = oriented_incidence(graphs.star(n + 1)).matrix
    xd = xt[:, [k - 1 for k in keep]]
    return Frame(xd.T @ b)


def default_star_keep(n: int, d: int) -> list[int]:
    """Alternating keep set: odd columns 1, 3, 5, ... extended by the even
    columns (largest first) if d exceeds their count, truncated to size d.

    Columns j and j+1 of the frame coincide unless some kept column lies
    in {j, j+1}; the odd columns hit every such pair except the last one
    when n is odd, which is why the extension starts at column n-1.
    """
    odds = list(range(1, n, 2))
    evens = list(range(2, n, 2))[::-1]
    return (odds + evens)[:d]


def k2kn_frame(n: int) -> Frame:
    """Tight frame [J - I | J - (n-1)I] for the prism-like product K_2 x K_n.

    The frame bound is n^2 - 2n + 2; the Gram pattern is two copies of K_n
    joined by the perfect matching i ~ i + n.
    """
    if n < 3:
        raise GraphError("k2kn_frame needs n >= 3")
    j = np.ones((n, n))
    return Frame(np.hstack([j - np.eye(n), j - (n - 1) * np.eye(n)]))


# ---------------------------------------------------------------------------
# Tight completions
# ---------------------------------------------------------------------------

def minimal_tight_completion(
    f: Frame, tol: TolerancePolicy = DEFAULT_TOL
) -> CompletionResult:
    """Append sqrt(B - lambda_i) x_i for every frame-operator eigenvalue
    below the top one (under multiplicity grouping).

    The result is B-tight with B = lambda_max, and no completion with
    fewer added vectors exists.
    """
    dec = sym_eig(f.synthesis @ f.synthesis.T, tol)
    groups = group_eigenvalues(dec.values, tol)
    bound = float(np.mean(dec.values[groups[-1]]))
    deficit = [i for grp in groups[:-1] for i in grp]
    added = tuple(
        np.sqrt(max(bound - dec.values[i], 0.0)) * dec.vectors[:, i]
        for i in deficit
    )
    mat = f.synthesis
    if added:
        mat = np.column_stack([mat, *added])
    return CompletionResult(frame=Frame(mat), added=added, bound=bound)


def two_step_completion(
    f: Frame, tol: TolerancePolicy = DEFAULT_TOL
) -> CompletionResult:
    """Generic two-step tight completion.

    Step 1 appends, for each non-orthogonal row pair (i, j) in
    lexicographic order, a two-entry column that cancels exactly that
    pair's inner product.  Step 2 pads every short row up to the maximum
    row norm with a single-entry column.  At most (d-1)(d+2)/2 columns are
    appended and the result is tight with bound m^2 (m the max row norm).
    """
    mat = f.synthesis
    d = f.d
    scale = max(1.0, float(np.max(np.abs(mat @ mat.T))))
    thr = tol.tau_rel * scale
    added: list[np.ndarray] = []
    for i in range(d):
        for j in range(i + 1, d):
            c = float(mat[i] @ mat[j])
            if abs(c) > thr:
                col = np.zeros(d)
                col[i] = -np.sign(c) * np.sqrt(abs(c))
                col[j] = np.sqrt(abs(c))
                added.append(col)
                mat = np.column_stack([mat, col])
    norms2 = np.einsum("ij,ij->i", mat, mat)
    top = float(np.max(norms2))
    for i in range(d):
        gap = top - norms2[i]
        if gap > thr:
            col = np.zeros(d)
            col[i] = np.sqrt(gap)
            added.append(col)
            mat = np.column_stack([mat, col])
    return CompletionResult(frame=Frame(mat), added=tuple(added), bound=top)


# ---------------------------------------------------------------------------
# Duplication-chain frames
# ---------------------------------------------------------------------------

def diamond_frame() -> Frame:
    """The 2 x 4 Parseval frame representing the diamond graph (non-edge {0, 1})."""
    s2 = np.sqrt(2.0)
    mat = np.array([[1 / s2, -3 / s2, 2.0, 1.0], [1 / s2, 3 / s2, 1.0, 2.0]])
    return Frame(mat / np.sqrt(10.0))


def c4_frame() -> Frame:
    """A Parseval frame representing the 4-cycle with its canonical labels."""
    mat = np.array([[1.0, 1.0, 0.0, -1.0], [0.0, 1.0, 1.0, 1.0]])
    return Frame(mat / np.sqrt(3.0))


def kn_minus_e_frame(n: int) -> Frame:
    """Parseval frame for K_n minus an edge (non-edge {0, 1}), n >= 4.

    Starts from the diamond frame and repeatedly duplicates the vector at
    vertex 2, which is adjacent to every other vertex.
    """
    if n < 4:
        raise GraphError("kn_minus_e_frame needs n >= 4")
    f = diamond_frame()
    for _ in range(n - 4):
        f = duplicate_vector(f, 2)
    return f


def line_o_frame(n: int) -> Frame:
    """Parseval frame for the line graph of O_n, n >= 4.

    The diamond frame handles n = 4; each further step duplicates vertex 0,
    a clique vertex not adjacent to the outside degree-2 vertex.
    """
    if n < 4:
        raise GraphError("line_o_frame needs n >= 4")
    f = diamond_frame()
    for _ in range(n - 4):
        f = duplicate_vector(f, 0)
    return f


def dup_chain_frames(max_line_o: int = 8) -> dict[str, Frame]:
    """Catalog of tight frames reachable by vertex duplication.

    Covers the line graphs of O_n for 4 <= n <= max_line_o and the three
    forbidden-subgraph families that are tight: G2 (one duplication of the
    4-cycle frame), G3 (= K_5 minus an edge), and G6 (two duplications of
    the diamond frame, one per degree-2 vertex).
    """
    catalog: dict[str, Frame] = {}
    for n in range(4, max_line_o + 1):
        catalog[f"line-o{n}"] = line_o_frame(n)
    catalog["g2"] = duplicate_vector(c4_frame(), 0)
    catalog["g3"] = kn_minus_e_frame(5)
    catalog["g6"] = duplicate_vector(duplicate_vector(diamond_frame(), 0), 1)
    for name, frame in catalog.items():
        if tightness(frame).kind != "parseval":
            raise FrameError(f"catalog entry {name} failed the Parseval check")
    return catalog
