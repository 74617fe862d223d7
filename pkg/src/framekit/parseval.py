"""Existence and construction of Parseval duals.

A frame admits a dual that is itself Parseval exactly when

  (a) its optimal lower bound satisfies A >= 1, and
  (b) the deviation dimension dim Im(S - I) -- how far the frame
      operator S is from the identity -- does not exceed the excess.

The construction mirrors the sufficiency proof.  Split the space along
the eigenvectors of S into the part where S acts as the identity and
the deviating part; on the latter apply g(t) = sqrt(1 - 1/t) to the
eigenvalues, and route the correction into the synthesis kernel through
a partial isometry R.  The dual analysis matrix is then

    V = U S^{-1} + R (0 (+) G) P,

with P the orthogonal projection onto the deviating eigenspace.  The
cross terms vanish because Im R lies in Ker U*, leaving V*U = I (a
dual) and V*V = S^{-1} + (I - S^{-1}) restricted appropriately = I
(Parseval).

Necessity is not certified algebraically here; `best_parseval_dual_residual`
provides the numerical counterpart by searching the full dual
parametrization for a Parseval member and reporting the closest miss.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

import numpy as np
from scipy.optimize import minimize

from .errors import NoParsevalDualError, NotAFrameError
from .frames import (
    COMPLEX,
    Frame,
    ToleranceConfig,
    analysis_matrix,
    derived_frame,
    excess,
    frame_bounds,
    frame_operator,
    is_frame,
    kernel_of_synthesis,
)
from .duals import dual_from_free_operator
from .linalg import adjoint, fix_phase, operator_norm


@dataclass(frozen=True)
class ParsevalDualReport:
    """Existence verdict for a Parseval dual, with the two quantities the
    criterion compares and, when constructed, the dual itself."""

    exists: bool
    a_opt: float
    deviation_dim: int
    excess_val: int
    dual: Optional[Frame] = None


def deviation_dimension(f: Frame, tol: ToleranceConfig) -> int:
    """dim Im(S - I): the number of frame-operator eigenvalues that are
    not 1 (within eig_one_atol)."""
    if not is_frame(f, tol):
        raise NotAFrameError("deviation dimension needs a frame")
    eigs = np.linalg.eigvalsh(frame_operator(f))
    return int(np.count_nonzero(np.abs(eigs - 1.0) > tol.eig_one_atol))


def parseval_dual_exists(f: Frame, tol: ToleranceConfig) -> ParsevalDualReport:
    """Evaluate the two existence conditions without constructing anything."""
    if not is_frame(f, tol):
        raise NotAFrameError("Parseval-dual existence needs a frame")
    a_opt = frame_bounds(f).a_opt
    dev = deviation_dimension(f, tol)
    exc = excess(f, tol).excess
    exists = a_opt >= 1.0 - tol.eig_one_atol and dev <= exc
    return ParsevalDualReport(exists=exists, a_opt=a_opt,
                              deviation_dim=dev, excess_val=exc)


def nonexistence_reasons(report: ParsevalDualReport,
                         tol: ToleranceConfig) -> List[str]:
    """Human-readable reasons why the existence test failed (empty when
    it passed)."""
    reasons = []
    if report.a_opt < 1.0 - tol.eig_one_atol:
        reasons.append(f"a_opt {format(report.a_opt, '.17g')} < 1")
    if report.deviation_dim > report.excess_val:
        reasons.append(
            f"deviation_dim {report.deviation_dim} > excess {report.excess_val}")
    return reasons


def construct_parseval_dual(f: Frame, tol: ToleranceConfig) -> ParsevalDualReport:
    """Build a Parseval dual following the sufficiency proof.

    Eigenvectors of S with eigenvalue in the eig_one_atol band around 1
    form the identity part; the remaining (deviating) eigenvectors,
    taken in descending eigenvalue order and phase-fixed for
    determinism, are paired by the partial isometry R with the leading
    synthesis-kernel vectors.  Borderline eigenvalues land in the
    identity part so g(t) = sqrt(1 - 1/t) never sees an argument
    below 1.

    The returned report carries the dual; its defining properties
    (V*V = I and V*U = I within atol) are deliberately left to the
    caller to verify, so that near-boundary tolerance choices surface
    as a failed check rather than a construction error.
    """
    report = parseval_dual_exists(f, tol)
    if not report.exists:
        raise NoParsevalDualError(
            "no Parseval dual: " + "; ".join(nonexistence_reasons(report, tol)))
    s = frame_operator(f)
    lam, vecs = np.linalg.eigh(s)
    plus_idx = np.flatnonzero(np.abs(lam - 1.0) > tol.eig_one_atol)
    plus_idx = plus_idx[np.argsort(-lam[plus_idx], kind="stable")]
    u = analysis_matrix(f)
    v = adjoint(np.linalg.solve(s, adjoint(u)))
    if plus_idx.size:
        u_plus = np.column_stack([fix_phase(vecs[:, i]) for i in plus_idx])
        g_vals = np.sqrt(np.maximum(0.0, 1.0 - 1.0 / np.real(lam[plus_idx])))
        kernel = kernel_of_synthesis(f, tol)[: plus_idx.size]
        k_cols = np.column_stack(kernel)
        v = v + k_cols @ (g_vals[:, None] * adjoint(u_plus))
    dual = derived_frame(f.field, np.conj(v), tol)
    return ParsevalDualReport(exists=True, a_opt=report.a_opt,
                              deviation_dim=report.deviation_dim,
                              excess_val=report.excess_val, dual=dual)


def rescale_to_admissible(f: Frame, tol: ToleranceConfig) -> tuple:
    """Scale the frame so its optimal lower bound becomes 1 (condition (a)
    of the existence test); returns (scaled frame, scale factor).

    Constructing a Parseval dual of the rescaled frame and undoing the
    scale yields a tight dual of the original with tight bound equal to
    the returned factor squared.
    """
    if not is_frame(f, tol):
        raise NotAFrameError("rescaling needs a frame")
    a_opt = frame_bounds(f).a_opt
    c = 1.0 / np.sqrt(a_opt)
    return derived_frame(f.field, c * f.vectors, tol), float(c)


def best_parseval_dual_residual(f: Frame, tol: ToleranceConfig, *,
                                attempts: int = 4, seed: int = 0,
                                maxiter: int = 400) -> float:
    """Search all duals of f for a Parseval one; return the smallest
    ||V*V - I|| (operator norm) found.

    The search runs over the free-operator parametrization, which sweeps
    out every dual, so a large minimum is numerical evidence that no
    Parseval dual exists.  Quasi-Newton descent from the canonical dual
    plus seeded random starts; intended for small instances.
    """
    if not is_frame(f, tol):
        raise NotAFrameError("dual search needs a frame")
    n, d = f.n, f.dim
    complex_w = f.field == COMPLEX
    size = n * d * (2 if complex_w else 1)

    def unpack(x: np.ndarray) -> np.ndarray:
        if complex_w:
            return x[: n * d].reshape(n, d) + 1j * x[n * d:].reshape(n, d)
        return x.reshape(n, d)

    def gram_residual(x: np.ndarray) -> np.ndarray:
        dual = dual_from_free_operator(f, unpack(x), tol)
        v = analysis_matrix(dual)
        return adjoint(v) @ v - np.eye(d)

    def objective(x: np.ndarray) -> float:
        return float(np.linalg.norm(gram_residual(x)))

    rng = np.random.default_rng(seed)
    starts = [np.zeros(size)]
    starts += [rng.standard_normal(size) for _ in range(max(0, attempts - 1))]
    best = np.inf
    for x0 in starts:
        result = minimize(objective, x0, method="L-BFGS-B",
                          options={"maxiter": maxiter})
        best = min(best, operator_norm(gram_residual(result.x)))
    return float(best)
