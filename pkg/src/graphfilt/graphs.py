"""Graph ingestion, normalized Laplacian, eigendecomposition, and filtering.

The eigensolver is a cyclic Jacobi rotation scheme: deterministic, dependency
free beyond numpy array arithmetic, and accurate at the dense desk scale this
library targets.  Designed filters are applied either spectrally (through the
graph Fourier basis) or as a matrix rational function of the Laplacian.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, DomainError, GraphFiltError, ParseError, StabilityError
from .response import RationalResponse

_JACOBI_TOL = 1e-12
_MAX_SWEEPS = 60
_COND_LIMIT = 1e12


@dataclass(frozen=True)
class Graph:
    """Undirected weighted graph: node count plus (u, v, w) edge triples,
    one per unordered pair, no self loops."""

    node_count: int
    edges: tuple

    def __post_init__(self):
        if self.node_count < 1:
            raise DomainError("graph needs at least one node")
        seen = set()
        for u, v, w in self.edges:
            if not (0 <= u < self.node_count and 0 <= v < self.node_count):
                raise DomainError(f"edge ({u}, {v}) references a missing node")
            if u == v:
                raise DomainError(f"self loop at node {u}")
            if w <= 0 or not math.isfinite(w):
                raise DomainError(f"edge ({u}, {v}) has non-positive weight {w!r}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise DomainError(f"duplicate edge {key}")
            seen.add(key)

    @classmethod
    def from_edges(cls, edges, node_count=None):
        edges = tuple((int(u), int(v), float(w)) for u, v, w in edges)
        if node_count is None:
            node_count = 1 + max((max(u, v) for u, v, _ in edges), default=0)
        return cls(node_count, edges)


@dataclass(frozen=True)
class SpectralDecomposition:
    """Ascending eigenvalues and orthonormal eigenvector columns (the graph
    Fourier basis when built from a normalized Laplacian)."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def load_edge_list(path) -> Graph:
    """Parse whitespace-separated ``u v [w]`` lines; '#' starts a comment and
    the default weight is 1.  Node indices are 0-based; the node count is the
    largest index seen plus one."""
    edges = []
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                parts = line.split()
                if len(parts) not in (2, 3):
                    raise ParseError(f"{path}:{lineno}: expected 'u v [w]', got {raw.rstrip()!r}")
                try:
                    u, v = int(parts[0]), int(parts[1])
                    w = float(parts[2]) if len(parts) == 3 else 1.0
                except ValueError as exc:
                    raise ParseError(f"{path}:{lineno}: {exc}") from exc
                edges.append((u, v, w))
    except OSError as exc:
        raise ParseError(f"cannot read edge list {path}: {exc}") from exc
    if not edges:
        raise ParseError(f"{path}: no edges found")
    try:
        return Graph.from_edges(edges)
    except DomainError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def load_signal(path) -> np.ndarray:
    """Read a graph signal: one value per line, or a single-column CSV with an
    optional non-numeric header line."""
    values = []
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.split("#", 1)[0].strip().rstrip(",")
                if not line:
                    continue
                try:
                    values.append(float(line))
                except ValueError:
                    if lineno == 1:
                        continue  # header row
                    raise ParseError(f"{path}:{lineno}: not a number: {line!r}") from None
    except OSError as exc:
        raise ParseError(f"cannot read signal {path}: {exc}") from exc
    if not values:
        raise ParseError(f"{path}: empty signal")
    return np.asarray(values, dtype=float)


def normalized_laplacian(g: Graph) -> np.ndarray:
    """L = D^(-1/2) (D - A) D^(-1/2); rows and columns of isolated nodes are
    zero (pseudo-inverse convention), which pins their eigenvalue at 0."""
    n = g.node_count
    adj = np.zeros((n, n))
    for u, v, w in g.edges:
        adj[u, v] += w
        adj[v, u] += w
    deg = adj.sum(axis=1)
    inv_sqrt = np.where(deg > 0.0, 1.0 / np.sqrt(np.where(deg > 0.0, deg, 1.0)), 0.0)
    lap = -inv_sqrt[:, None] * adj * inv_sqrt[None, :]
    np.fill_diagonal(lap, np.where(deg > 0.0, 1.0, 0.0))
    return lap


def eig_sym(matrix: np.ndarray) -> SpectralDecomposition:
    """Symmetric eigendecomposition by cyclic Jacobi rotations.

    Sweeps rows in order, annihilating each off-diagonal element, until
    off(A) < 1e-12 * ||A||_F.  Eigenvalues are returned ascending with a
    deterministic eigenvector sign (largest-magnitude component positive), so
    repeated runs produce identical output files.
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if not np.allclose(a, a.T, rtol=0.0, atol=1e-12 * max(1.0, np.max(np.abs(a)))):
        raise DomainError("matrix is not symmetric")
    a = 0.5 * (a + a.T)
    v = np.eye(n)
    fnorm = np.linalg.norm(a)
    if fnorm > 0.0:
        for _ in range(_MAX_SWEEPS):
            off = np.sqrt(max(0.0, np.sum(a * a) - np.sum(np.diag(a) ** 2)))
            if off < _JACOBI_TOL * fnorm:
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if abs(apq) < 1e-300:
                        continue
                    theta = 0.5 * (a[q, q] - a[p, p]) / apq
                    t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(1.0, theta))
                    c = 1.0 / math.sqrt(1.0 + t * t)
                    s = t * c
                    rp, rq = a[p, :].copy(), a[q, :].copy()
                    a[p, :] = c * rp - s * rq
                    a[q, :] = s * rp + c * rq
                    cp, cq = a[:, p].copy(), a[:, q].copy()
                    a[:, p] = c * cp - s * cq
                    a[:, q] = s * cp + c * cq
                    vp, vq = v[:, p].copy(), v[:, q].copy()
                    v[:, p] = c * vp - s * vq
                    v[:, q] = s * vp + c * vq
        else:
            raise GraphFiltError("Jacobi eigensolver failed to converge")
    eigenvalues = np.diag(a).copy()
    order = np.argsort(eigenvalues, kind="stable")
    eigenvalues = eigenvalues[order]
    v = v[:, order]
    for j in range(n):
        i = int(np.argmax(np.abs(v[:, j])))
        if v[i, j] < 0.0:
            v[:, j] = -v[:, j]
    return SpectralDecomposition(eigenvalues, v)


def spectral_decomposition(g: Graph) -> SpectralDecomposition:
    """Graph Fourier basis of the normalized Laplacian.

    Eigenvalues of a normalized Laplacian lie in [0, 2]; rounding noise just
    outside that interval (|error| <= 1e-9) is clipped back onto it.
    """
    dec = eig_sym(normalized_laplacian(g))
    ev = dec.eigenvalues
    if np.min(ev) < -1e-9 or np.max(ev) > 2.0 + 1e-9:
        raise DomainError(f"normalized-Laplacian eigenvalues out of range: {ev.min()}..{ev.max()}")
    return SpectralDecomposition(np.clip(ev, 0.0, 2.0), dec.eigenvectors)


def _check_signal(dec_or_n, x):
    x = np.asarray(x, dtype=float)
    n = dec_or_n if isinstance(dec_or_n, int) else len(dec_or_n.eigenvalues)
    if x.shape != (n,):
        raise DimensionError(f"signal shape {x.shape} does not match {n} nodes")
    return x


def graph_fourier(dec: SpectralDecomposition, x) -> np.ndarray:
    """Forward graph Fourier transform: spectrum = U^T x."""
    x = _check_signal(dec, x)
    return dec.eigenvectors.T @ x


def inverse_graph_fourier(dec: SpectralDecomposition, spectrum) -> np.ndarray:
    """Inverse transform: x = U spectrum."""
    spectrum = _check_signal(dec, spectrum)
    return dec.eigenvectors @ spectrum


def apply_spectral_filter(dec: SpectralDecomposition, h, x) -> np.ndarray:
    """y = U h(Lambda) U^T x for a frequency response callable ``h`` that
    accepts an eigenvalue array."""
    x = _check_signal(dec, x)
    gains = np.asarray(h(dec.eigenvalues), dtype=float)
    if gains.shape != dec.eigenvalues.shape:
        raise DimensionError("frequency response returned a mis-shaped gain vector")
    if np.all(gains == 1.0):
        return x.copy()  # exact identity; skips U U^T rounding
    return dec.eigenvectors @ (gains * (dec.eigenvectors.T @ x))


def apply_rational_matrix_filter(g: Graph, r: RationalResponse, x) -> np.ndarray:
    """y = den(L)^(-1) num(L) x with Horner matrix-polynomial application.

    The numerator needs matrix-vector products only; the denominator matrix is
    assembled once and factored by a dense solve (never inverted).  A condition
    estimate above 1e12 signals a pole sitting on the spectrum.
    """
    x = _check_signal(g.node_count, x)
    lap = normalized_laplacian(g) / r.lambda_ref
    num, den = r.num_coeffs, r.den_coeffs
    vec = num[-1] * x
    for c in num[-2::-1]:
        vec = lap @ vec + c * x
    eye = np.eye(g.node_count)
    dmat = den[-1] * eye
    for c in den[-2::-1]:
        dmat = lap @ dmat + c * eye
    if np.linalg.cond(dmat) > _COND_LIMIT:
        raise StabilityError("denominator matrix is numerically singular on this graph")
    return r.gain * np.linalg.solve(dmat, vec)
