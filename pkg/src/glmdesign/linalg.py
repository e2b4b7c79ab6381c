"""Dense symmetric kernels for small information matrices.

Everything here operates on plain ``numpy`` arrays treated as symmetric
matrices (dimensions of order 20 at most).  Factorizations fail loudly via
:class:`~glmdesign.errors.NotPositiveDefinite` instead of returning garbage
inverses for near-degenerate designs.
"""

from __future__ import annotations

import numpy as np

from .errors import NotPositiveDefinite

#: Cholesky pivots at or below this value, relative to the largest diagonal
#: entry, are treated as loss of positive definiteness.
SPD_TOLERANCE = 1e-12


def require_symmetric(m: np.ndarray, name: str = "matrix") -> np.ndarray:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"{name} must be square, got shape {m.shape}")
    if not np.array_equal(m, m.T):
        raise ValueError(f"{name} must be symmetric as stored")
    return m


def symmetrize(m: np.ndarray) -> np.ndarray:
    """Force exact storage symmetry, 0.5 * (M + M^T)."""
    return 0.5 * (m + m.T)


class SpdFactorization:
    """Cholesky factorization of a symmetric positive definite matrix.

    Keeps the lower factor L with ``m = L @ L.T`` and the smallest pivot
    (squared diagonal entry of L) met during elimination.
    """

    def __init__(self, lower: np.ndarray, smallest_pivot: float):
        self._lower = lower
        self.smallest_pivot = smallest_pivot
        self._inverse: np.ndarray | None = None

    @property
    def dim(self) -> int:
        return self._lower.shape[0]

    @property
    def lower(self) -> np.ndarray:
        return self._lower

    def logdet(self) -> float:
        return 2.0 * float(np.sum(np.log(np.diag(self._lower))))

    def solve(self, b: np.ndarray) -> np.ndarray:
        """Solve m @ x = b for vector or matrix right-hand sides."""
        b = np.asarray(b, dtype=float)
        from scipy.linalg import solve_triangular

        y = solve_triangular(self._lower, b, lower=True, check_finite=False)
        return solve_triangular(self._lower.T, y, lower=False, check_finite=False)

    def inverse(self) -> np.ndarray:
        """Dense inverse, cached and exactly symmetric."""
        if self._inverse is None:
            inv = self.solve(np.eye(self.dim))
            self._inverse = symmetrize(inv)
        return self._inverse


def factorize_spd(m: np.ndarray, spd_tolerance: float = SPD_TOLERANCE) -> SpdFactorization:
    """Cholesky-factorize a symmetric matrix, failing loudly when not SPD.

    The pivot threshold is ``spd_tolerance`` relative to the largest diagonal
    entry of ``m``; a pivot at or below it raises
    :class:`~glmdesign.errors.NotPositiveDefinite`.
    """
    m = require_symmetric(m)
    n = m.shape[0]
    scale = float(np.max(np.diag(m))) if n else 0.0
    if scale <= 0.0:
        raise NotPositiveDefinite("largest diagonal entry is not positive")
    threshold = spd_tolerance * scale

    lower = np.zeros_like(m)
    smallest = np.inf
    for k in range(n):
        pivot = m[k, k] - lower[k, :k] @ lower[k, :k]
        if not np.isfinite(pivot) or pivot <= threshold:
            raise NotPositiveDefinite(
                f"pivot {pivot:.3e} at column {k} is below tolerance "
                f"{threshold:.3e}; information matrix is singular or deficient"
            )
        smallest = min(smallest, pivot)
        root = np.sqrt(pivot)
        lower[k, k] = root
        if k + 1 < n:
            lower[k + 1 :, k] = (m[k + 1 :, k] - lower[k + 1 :, :k] @ lower[k, :k]) / root
    return SpdFactorization(lower, smallest)


def trace_power(m: np.ndarray, p: float) -> float:
    """Trace of m**p.

    Integer ``p`` uses repeated multiplication; fractional ``p`` goes through
    the symmetric eigendecomposition and requires strictly positive
    eigenvalues.
    """
    m = require_symmetric(m)
    if p < 0:
        raise ValueError("exponent p must be >= 0")
    if float(p).is_integer():
        k = int(p)
        if k == 0:
            return float(m.shape[0])
        acc = m
        for _ in range(k - 1):
            acc = acc @ m
        return float(np.trace(acc))
    eigvals = np.linalg.eigvalsh(m)
    if np.min(eigvals) <= 0.0:
        raise NotPositiveDefinite(
            f"fractional power {p} needs positive eigenvalues, got min {np.min(eigvals):.3e}"
        )
    return float(np.sum(eigvals**p))


def sym_power(m: np.ndarray, p: float) -> np.ndarray:
    """Matrix power m**p of a symmetric matrix.

    Integer ``p >= 0`` by repeated multiplication; fractional or negative
    ``p`` via eigendecomposition (positive spectrum required).
    """
    m = require_symmetric(m)
    if float(p).is_integer() and p >= 0:
        k = int(p)
        acc = np.eye(m.shape[0])
        for _ in range(k):
            acc = acc @ m
        return acc
    eigvals, vecs = np.linalg.eigh(m)
    if np.min(eigvals) <= 0.0:
        raise NotPositiveDefinite(
            f"power {p} needs positive eigenvalues, got min {np.min(eigvals):.3e}"
        )
    return symmetrize((vecs * eigvals**p) @ vecs.T)
