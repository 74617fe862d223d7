"""Shared test utilities: independent oracles and seeded ensemble builders.

The oracles deliberately avoid the library's own numerics: rank over
exact rationals, excess by exhaustive deletion.
"""

from fractions import Fraction
from itertools import combinations

import numpy as np

import framekit as fk

TOL = fk.ToleranceConfig()


def scaled(frame, c):
    return fk.Frame(dim=frame.dim, field=frame.field, vectors=c * frame.vectors)


def rational_rank(rows):
    """Rank by Gaussian elimination over exact rationals (real entries)."""
    m = [[Fraction(x) for x in row] for row in rows]
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    rank = 0
    row = 0
    for col in range(n_cols):
        pivot = next((r for r in range(row, n_rows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = m[row][col]
        m[row] = [x / inv for x in m[row]]
        for r in range(n_rows):
            if r != row and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[row])]
        rank += 1
        row += 1
        if row == n_rows:
            break
    return rank


def deletion_excess(frame, rtol=1e-10):
    """Greatest k such that deleting some k vectors leaves a spanning set,
    found by exhaustive search (small n only)."""
    vectors = np.array(frame.vectors)
    n, d = vectors.shape
    for k in range(n - d, 0, -1):
        for drop in combinations(range(n), k):
            keep = [i for i in range(n) if i not in drop]
            s = np.linalg.svd(vectors[keep], compute_uv=False)
            if np.count_nonzero(s > rtol * s[0]) == d:
                return k
    return 0


def gaussian(rng, rows, cols, complex_valued):
    g = rng.standard_normal((rows, cols))
    if complex_valued:
        return (g + 1j * rng.standard_normal((rows, cols))) / np.sqrt(2.0)
    return g


def haar_columns(rng, n, k, complex_valued):
    """k orthonormal columns in n-space, phase-normalized."""
    q, r = np.linalg.qr(gaussian(rng, n, n, complex_valued))
    phases = np.diagonal(r) / np.abs(np.diagonal(r))
    return (q * np.conj(phases)[None, :])[:, :k]


def well_conditioned_invertible(rng, d, complex_valued, lo=0.6, hi=1.8):
    """Invertible d x d map with singular values in [lo, hi]."""
    q1 = haar_columns(rng, d, d, complex_valued)
    q2 = haar_columns(rng, d, d, complex_valued)
    sv = rng.uniform(lo, hi, size=d)
    return q1 @ (sv[:, None] * np.conj(q2).T)


def random_dual_pair(dim, n, seed, field="real", tol=TOL):
    """A random frame together with the dual carved out by a random free
    operator; exact dual pair by construction."""
    f = fk.random_frame(dim, n, seed, field)
    rng = np.random.default_rng(seed + 1)
    w = gaussian(rng, n, dim, field == "complex")
    return f, fk.dual_from_free_operator(f, w, tol)


def admissible_frame(dim, n, dev, seed, field="real"):
    """Frame with lower bound exactly 1 and deviation dimension dev
    (dev <= n - dim), i.e. satisfying both Parseval-dual existence
    conditions by construction."""
    assert 0 <= dev <= min(dim, n - dim)
    rng = np.random.default_rng(seed)
    p = haar_columns(rng, n, dim, field == "complex")
    v = haar_columns(rng, dim, dim, field == "complex")
    lam = np.ones(dim)
    lam[:dev] = rng.uniform(1.2, 3.0, size=dev)
    u = p @ (np.sqrt(lam)[:, None] * np.conj(v).T)
    return fk.Frame(dim=dim, field=field, vectors=np.conj(u))


def sharpness_frame():
    """Four-vector Parseval frame in the plane whose J = {1, 2} partial
    operator has both eigenvalues 1/2, attaining the 3/4 lower bound."""
    r = 1.0 / np.sqrt(2.0)
    return fk.Frame(dim=2, field="real",
                    vectors=[[r, 0], [0, r], [r, 0], [0, r]])


def direct_sum_frames(f, g):
    """Block direct sum: a frame in dim_f + dim_g space whose excess is
    the sum of the two excesses (Parseval when both are)."""
    rows = []
    for v in f.vectors:
        rows.append(np.concatenate([v, np.zeros(g.dim)]))
    for v in g.vectors:
        rows.append(np.concatenate([np.zeros(f.dim), v]))
    field = "complex" if "complex" in (f.field, g.field) else "real"
    return fk.Frame(dim=f.dim + g.dim, field=field, vectors=np.array(rows))


def sort_rows_by_deficit(frame):
    """Reorder vectors so the norm deficits 1 - ||f_k||^2 descend."""
    deficits = 1.0 - np.sum(np.abs(frame.vectors) ** 2, axis=1)
    order = np.argsort(-deficits, kind="stable")
    return fk.Frame(dim=frame.dim, field=frame.field,
                    vectors=np.array(frame.vectors)[order])
