"""Shared dense linear-algebra helpers (SVD ranks, subspaces, projections).

Everything here is a thin, deterministic wrapper over numpy's LAPACK
bindings. Sign/phase canonicalization makes decompositions reproducible
across calls so that constructed frames are stable test targets.
"""

from __future__ import annotations

import numpy as np


def adjoint(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.conj(m).T


def operator_norm(m: np.ndarray) -> float:
    """Largest singular value (spectral norm)."""
    m = np.atleast_2d(np.asarray(m))
    if m.size == 0:
        return 0.0
    return float(np.linalg.norm(m, 2))


def rank_from_singular_values(s: np.ndarray, rtol: float) -> int:
    """Count singular values above the relative cutoff rtol * s_max."""
    s = np.asarray(s, dtype=float)
    if s.size == 0 or s[0] <= 0.0:
        return 0
    return int(np.count_nonzero(s > rtol * s[0]))


def matrix_rank(m: np.ndarray, rtol: float) -> int:
    m = np.atleast_2d(np.asarray(m))
    if m.size == 0:
        return 0
    s = np.linalg.svd(m, compute_uv=False)
    return rank_from_singular_values(s, rtol)


def fix_phase(v: np.ndarray) -> np.ndarray:
    """Scale a vector by a unit-modulus factor so its largest-magnitude
    entry becomes real and positive. Deterministic representative of the
    phase equivalence class; a no-op for the zero vector."""
    v = np.asarray(v)
    i = int(np.argmax(np.abs(v)))
    a = v[i]
    if a == 0:
        return v
    return v * (np.conj(a) / abs(a))


def orthonormal_range(m: np.ndarray, rtol: float) -> np.ndarray:
    """Orthonormal basis (columns) of the column space of m."""
    m = np.atleast_2d(np.asarray(m))
    u, s, _ = np.linalg.svd(m, full_matrices=False)
    r = rank_from_singular_values(s, rtol)
    return u[:, :r]


def orthonormal_nullspace(m: np.ndarray, rtol: float) -> np.ndarray:
    """Orthonormal basis (columns) of {x : m x = 0}, phase-canonicalized."""
    m = np.atleast_2d(np.asarray(m))
    _, s, vh = np.linalg.svd(m, full_matrices=True)
    r = rank_from_singular_values(s, rtol)
    basis = adjoint(vh)[:, r:]
    for j in range(basis.shape[1]):
        basis[:, j] = fix_phase(basis[:, j])
    return basis


def orthonormalize_columns(m: np.ndarray, rtol: float) -> np.ndarray:
    """Orthonormal basis for span(columns of m); empty input gives an
    (m.shape[0], 0) array."""
    m = np.atleast_2d(np.asarray(m))
    if m.shape[1] == 0:
        return m.copy()
    return orthonormal_range(m, rtol)


def projection_onto_columns(q: np.ndarray) -> np.ndarray:
    """Orthogonal projection Q Q* onto the span of orthonormal columns q;
    returns the zero matrix for an empty basis."""
    q = np.atleast_2d(np.asarray(q))
    n = q.shape[0]
    if q.shape[1] == 0:
        return np.zeros((n, n), dtype=q.dtype)
    return q @ adjoint(q)


def subspace_distance(q1: np.ndarray, q2: np.ndarray) -> float:
    """Sine of the largest principal angle between the column spans of two
    orthonormal bases. Subspaces of unequal dimension are at distance 1;
    two zero-dimensional subspaces are at distance 0."""
    q1 = np.atleast_2d(np.asarray(q1))
    q2 = np.atleast_2d(np.asarray(q2))
    d1, d2 = q1.shape[1], q2.shape[1]
    if d1 != d2:
        return 1.0
    if d1 == 0:
        return 0.0
    # ||(I - Q1 Q1*) Q2|| rather than sqrt(1 - cos^2): the latter amplifies
    # rounding in the cosines to ~1e-8 for subspaces that are actually equal
    residual = q2 - q1 @ (adjoint(q1) @ q2)
    return min(1.0, operator_norm(residual))


def subspaces_intersect_trivially(q1: np.ndarray, q2: np.ndarray,
                                  rtol: float) -> bool:
    """True when span(q1) and span(q2) meet only at 0 (rank additivity of
    the concatenated bases)."""
    d1 = q1.shape[1] if q1.ndim == 2 else 0
    d2 = q2.shape[1] if q2.ndim == 2 else 0
    if d1 == 0 or d2 == 0:
        return True
    combined = np.hstack([q1, q2])
    return matrix_rank(combined, rtol) == d1 + d2


def gaussian_matrix(rng: np.random.Generator, rows: int, cols: int,
                    complex_valued: bool) -> np.ndarray:
    """Standard Gaussian matrix; complex entries have unit total variance."""
    g = rng.standard_normal((rows, cols))
    if complex_valued:
        return (g + 1j * rng.standard_normal((rows, cols))) / np.sqrt(2.0)
    return g
