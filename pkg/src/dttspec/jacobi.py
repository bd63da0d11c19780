"""Cyclic Jacobi eigensolver and eigenvalue clustering.

This is the numeric oracle for every analytic spectrum claim, so it shares
no code with the closed-form modules: plain cyclic-by-rows plane rotations
on a private working copy, with the rotation parameter taken from the
smaller root of t^2 + 2t*theta - 1 = 0 for stability.  Convergence is
declared when the off-diagonal Frobenius norm drops below
1e-13 * n * ||input||_F; elements below 1e-300 are skipped to avoid
underflow churn.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence, NotSymmetric

_SKIP = 1e-300
_MAX_SWEEPS = 60


@dataclass(frozen=True)
class EigenResult:
    n: int
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray | None
    sweeps_used: int
    off_diag_norm: float


@dataclass(frozen=True)
class ClusteredSpectrum:
    """(representative, multiplicity) pairs, representatives ascending."""

    clusters: tuple[tuple[float, int], ...]


def _off_diag_norm(a: np.ndarray) -> float:
    off = a - np.diag(a.diagonal())
    return math.sqrt(float((off * off).sum()))


def _rotation_parameter(app: float, aqq: float, apq: float) -> float:
    theta = (aqq - app) / (2.0 * apq)
    if abs(theta) > 1e150:  # avoid overflow in theta^2; limit of the formula
        return 1.0 / (2.0 * theta)
    root = math.sqrt(theta * theta + 1.0)
    return 1.0 / (theta + root) if theta >= 0.0 else -1.0 / (-theta + root)


def jacobi_eigen(m: np.ndarray, want_vectors: bool = False) -> EigenResult:
    """Eigen-decomposition of a symmetric matrix by cyclic Jacobi rotations."""
    a = np.array(m, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSymmetric(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n == 0:
        return EigenResult(0, np.empty(0), np.empty((0, 0)) if want_vectors else None, 0, 0.0)
    scale = float(np.max(np.abs(a)))
    if float(np.max(np.abs(a - a.T))) > 1e-12 * scale:
        raise NotSymmetric("matrix deviates from symmetry beyond 1e-12 * max|entry|")

    vectors = np.eye(n) if want_vectors else None
    threshold = 1e-13 * n * math.sqrt(float((a * a).sum()))
    sweeps = 0
    off = _off_diag_norm(a)
    while off > threshold and sweeps < _MAX_SWEEPS:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= _SKIP:
                    continue
                app, aqq = a[p, p], a[q, q]
                t = _rotation_parameter(app, aqq, apq)
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp, cq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
                if vectors is not None:
                    vp, vq = vectors[:, p].copy(), vectors[:, q].copy()
                    vectors[:, p] = c * vp - s * vq
                    vectors[:, q] = s * vp + c * vq
        sweeps += 1
        off = _off_diag_norm(a)

    order = np.argsort(a.diagonal(), kind="stable")
    result = EigenResult(
        n=n,
        eigenvalues=a.diagonal()[order].copy(),
        eigenvectors=vectors[:, order] if vectors is not None else None,
        sweeps_used=sweeps,
        off_diag_norm=off,
    )
    if off > threshold:
        raise NoConvergence(
            f"off-diagonal norm {off:.3e} above {threshold:.3e} after {sweeps} sweeps",
            partial=result,
        )
    return result


def default_cluster_tolerances(n: int) -> tuple[float, float]:
    """(tol_abs, tol_rel) separating all analytic eigenvalue gaps up to n=256."""
    return 1e-8 * math.sqrt(max(n, 1)), 1e-8


def cluster_eigenvalues(values, tol_abs: float, tol_rel: float) -> ClusteredSpectrum:
    """Greedy left-to-right clustering of an ascending eigenvalue list.

    A value joins the current cluster iff its gap to the cluster's running
    mean is at most tol_abs + tol_rel * max(1, |mean|); the representative
    is the arithmetic mean of the members.
    """
    if tol_abs <= 0.0 or tol_rel <= 0.0:
        raise ValueError("clustering tolerances must be positive")
    clusters: list[tuple[float, int]] = []
    for v in np.asarray(values, dtype=np.float64):
        v = float(v)
        if clusters:
            mean, count = clusters[-1]
            if abs(v - mean) <= tol_abs + tol_rel * max(1.0, abs(mean)):
                clusters[-1] = ((mean * count + v) / (count + 1), count + 1)
                continue
        clusters.append((v, 1))
    return ClusteredSpectrum(clusters=tuple(clusters))
