"""Finite frames and their basic operators.

A frame here is an ordered finite system of vectors (f_1, ..., f_n)
in a d-dimensional real or complex space.  The analysis operator maps
x to its coefficient sequence (<x, f_k>)_k and is represented by the
n x d matrix whose rows are the conjugated vectors; the synthesis
operator is its conjugate transpose, and the frame operator is
S = (synthesis)(analysis).  The extreme eigenvalues of S are the
optimal frame bounds; the system spans the space exactly when the
lower bound is positive.

The number of vectors beyond a minimal spanning set -- the dimension
of the synthesis kernel, n - rank -- is called the excess and is the
quantity most of the higher-level results in this package revolve
around.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List

import numpy as np

from .errors import (
    BadParametersError,
    DimensionMismatchError,
    FramekitError,
    NotAFrameError,
    NotParsevalError,
)
from .linalg import (
    adjoint,
    operator_norm,
    orthonormal_nullspace,
    rank_from_singular_values,
)

REAL = "real"
COMPLEX = "complex"
_FIELDS = (REAL, COMPLEX)


@dataclass(frozen=True)
class ToleranceConfig:
    """Numerical knobs shared by every predicate in the package.

    Parameters
    ----------
    rank_rtol : float
        Relative singular-value cutoff for rank decisions: singular
        values above ``rank_rtol * sigma_max`` count toward the rank.
    atol : float
        Absolute tolerance for operator-norm and vector comparisons.
    eig_one_atol : float
        Half-width of the band around 1 inside which a frame-operator
        eigenvalue is classified as "equal to one".
    """

    rank_rtol: float = 1e-10
    atol: float = 1e-8
    eig_one_atol: float = 1e-8

    def __post_init__(self) -> None:
        for name in ("rank_rtol", "atol", "eig_one_atol"):
            value = getattr(self, name)
            if not 0.0 < value < 1.0:
                raise BadParametersError(
                    f"{name} must lie strictly between 0 and 1, got {value!r}")


@dataclass(frozen=True, eq=False)
class Frame:
    """An ordered system of n vectors in a d-dimensional space.

    Vectors are the rows of an (n, d) complex array.  Real-field frames
    use the same storage with every imaginary part exactly zero, so all
    operations run through a single code path.  Zero rows are legal:
    some constructions below legitimately emit the zero vector.
    """

    dim: int
    field: str
    vectors: np.ndarray

    def __post_init__(self) -> None:
        if self.field not in _FIELDS:
            raise FramekitError(f"unknown scalar field {self.field!r}")
        arr = np.array(self.vectors, dtype=np.complex128)
        if arr.ndim != 2:
            raise DimensionMismatchError("vectors must form a 2-d array of rows")
        n, d = arr.shape
        if n < 1:
            raise FramekitError("a frame needs at least one vector")
        if self.dim < 1 or d != self.dim:
            raise DimensionMismatchError(
                f"expected rows of length {self.dim}, got {d}")
        if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
            raise FramekitError("frame entries must be finite")
        if self.field == REAL and np.any(arr.imag != 0.0):
            raise FramekitError("real-field frame carries nonzero imaginary parts")
        arr.setflags(write=False)
        object.__setattr__(self, "vectors", arr)

    @property
    def n(self) -> int:
        """Number of vectors."""
        return self.vectors.shape[0]


def derived_frame(field: str, vectors: np.ndarray, tol: ToleranceConfig) -> Frame:
    """Package vectors produced by an operation as a frame over `field`.

    Complex arithmetic can leave imaginary dust on data that is
    mathematically real; for real-field results the dust is checked
    against atol and stripped so the real-mode invariant (imaginary
    parts exactly zero) survives derived constructions.
    """
    arr = np.asarray(vectors, dtype=np.complex128)
    if field == REAL:
        dust = float(np.max(np.abs(arr.imag))) if arr.size else 0.0
        if dust > tol.atol:
            raise FramekitError(
                f"operation on real-field data produced imaginary parts of size {dust:.3e}")
        arr = np.asarray(arr.real, dtype=np.complex128)
    return Frame(dim=arr.shape[1], field=field, vectors=arr)


@dataclass(frozen=True)
class FrameBounds:
    """Optimal constants A, B in A||x||^2 <= sum |<x,f_k>|^2 <= B||x||^2."""

    a_opt: float
    b_opt: float


@dataclass(frozen=True)
class ExcessReport:
    """Excess of a frame together with the rank evidence behind it."""

    excess: int
    rank: int
    singular_values: List[float]
    tolerance_used: float


def analysis_matrix(f: Frame) -> np.ndarray:
    """Matrix of x -> (<x, f_k>)_k: one conjugated vector per row (n x d)."""
    return np.conj(f.vectors)


def synthesis_matrix(f: Frame) -> np.ndarray:
    """Matrix of (c_k) -> sum c_k f_k: the conjugate transpose of the
    analysis matrix (d x n); its columns are the frame vectors."""
    return adjoint(analysis_matrix(f))


def frame_operator(f: Frame) -> np.ndarray:
    """S = (synthesis)(analysis) = sum_k f_k f_k^*; Hermitian PSD, d x d."""
    u = analysis_matrix(f)
    return adjoint(u) @ u


def gram_matrix(f: Frame) -> np.ndarray:
    """n x n matrix with (j, k) entry <f_k, f_j>; for a Parseval frame this
    is the orthogonal projection onto the range of the analysis operator."""
    u = analysis_matrix(f)
    return u @ adjoint(u)


def frame_bounds(f: Frame) -> FrameBounds:
    """Extreme eigenvalues of the frame operator (clamped at 0 against
    rounding); a_opt = 0 signals that the system does not span."""
    eigs = np.linalg.eigvalsh(frame_operator(f))
    return FrameBounds(a_opt=max(float(eigs[0]), 0.0),
                       b_opt=max(float(eigs[-1]), 0.0))


def is_frame(f: Frame, tol: ToleranceConfig) -> bool:
    """True when the vectors span the whole space, i.e. the optimal lower
    bound clears the rank cutoff relative to the upper bound."""
    b = frame_bounds(f)
    return b.a_opt > tol.rank_rtol * b.b_opt


def is_parseval(f: Frame, tol: ToleranceConfig) -> bool:
    """True when the frame operator is the identity within atol."""
    s = frame_operator(f)
    return operator_norm(s - np.eye(f.dim)) <= tol.atol


def excess(f: Frame, tol: ToleranceConfig) -> ExcessReport:
    """Number of vectors beyond a minimal spanning set.

    Computed as n - rank(analysis matrix), the dimension of the
    synthesis kernel; the singular values backing the rank decision are
    returned (zero-padded to length n) so the verdict is auditable.
    """
    if not is_frame(f, tol):
        raise NotAFrameError("excess is defined for frames only")
    s = np.linalg.svd(analysis_matrix(f), compute_uv=False)
    rank = rank_from_singular_values(s, tol.rank_rtol)
    padded = np.zeros(f.n)
    padded[: s.size] = s
    return ExcessReport(excess=f.n - rank, rank=rank,
                        singular_values=[float(v) for v in padded],
                        tolerance_used=tol.rank_rtol)


def kernel_of_synthesis(f: Frame, tol: ToleranceConfig) -> List[np.ndarray]:
    """Orthonormal basis of the synthesis kernel, i.e. the coefficient
    sequences c with sum c_k f_k = 0 (the orthogonal complement of the
    analysis range).  Phase-fixed so repeated runs return identical
    vectors."""
    basis = orthonormal_nullspace(synthesis_matrix(f), tol.rank_rtol)
    return [basis[:, j].copy() for j in range(basis.shape[1])]


def excess_from_norms(f: Frame, tol: ToleranceConfig) -> float:
    """sum_k (1 - ||f_k||^2); for a Parseval frame this equals the excess,
    reading the redundancy straight off the vector norms."""
    if not is_parseval(f, tol):
        raise NotParsevalError("norm-based excess needs a Parseval frame")
    norms_sq = np.sum(np.abs(f.vectors) ** 2, axis=1)
    return float(np.sum(1.0 - norms_sq))
