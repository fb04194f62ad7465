"""Dense Hermitian operator algebra and entropy primitives.

Matrices are plain complex ``numpy`` arrays. :class:`DensityOperator` wraps one
after checking it is Hermitian, unit-trace and positive semidefinite. All
logarithms are base 2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Union

import numpy as np

from .errors import DimensionError, InvalidStateError, NotHermitianError

HERMITIAN_TOL = 1e-10
TRACE_TOL = 1e-10
PSD_TOL = 1e-10
CLIP_TOL = 1e-12

JACOBI_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100


def _frozen(m: np.ndarray) -> np.ndarray:
    m = np.array(m, dtype=complex, copy=True)
    m.setflags(write=False)
    return m


@dataclass(frozen=True, eq=False)
class DensityOperator:
    """Trace-one positive semidefinite Hermitian matrix (read-only)."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionError(f"density operator must be square, got shape {m.shape}")
        herm = np.max(np.abs(m - m.conj().T)) if m.size else 0.0
        if herm > HERMITIAN_TOL:
            raise NotHermitianError(f"not Hermitian (max asymmetry {herm:.3g})")
        tr = np.trace(m)
        if abs(tr - 1) > TRACE_TOL:
            raise InvalidStateError(f"trace is {tr.real:.12g}, expected 1")
        # M + tol*I admits a Cholesky factor iff min eigenvalue >= -tol (up to rounding)
        try:
            np.linalg.cholesky(0.5 * (m + m.conj().T) + PSD_TOL * np.eye(m.shape[0]))
        except np.linalg.LinAlgError:
            raise InvalidStateError("operator is not positive semidefinite") from None
        object.__setattr__(self, "matrix", _frozen(m))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def spectrum(self) -> "Spectrum":
        return hermitian_eig(self.matrix)[0]

    def purity(self) -> float:
        return float(np.real(np.trace(self.matrix @ self.matrix)))


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues in descending order."""

    values: np.ndarray

    def __post_init__(self):
        v = np.array(self.values, dtype=float, copy=True).ravel()
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def clipped(self) -> np.ndarray:
        """Eigenvalues with rounding residue in [-1e-12, 0) set to zero."""
        v = self.values
        if v.size and v.min() < -CLIP_TOL:
            raise InvalidStateError(f"eigenvalue {v.min():.3g} is below -{CLIP_TOL:g}")
        return np.where(v < 0, 0.0, v)


OperatorLike = Union[DensityOperator, np.ndarray]


def as_matrix(x: OperatorLike) -> np.ndarray:
    if isinstance(x, DensityOperator):
        return x.matrix
    return np.asarray(x, dtype=complex)


def ket(d: int, i: int) -> np.ndarray:
    v = np.zeros(d, dtype=complex)
    v[i] = 1.0
    return v


def projector(vec: np.ndarray) -> np.ndarray:
    vec = np.asarray(vec, dtype=complex).ravel()
    vec = vec / np.linalg.norm(vec)
    return np.outer(vec, vec.conj())


def max_entry_distance(a: OperatorLike, b: OperatorLike) -> float:
    return float(np.max(np.abs(as_matrix(a) - as_matrix(b))))


def tensor(a: OperatorLike, b: OperatorLike) -> np.ndarray:
    return np.kron(as_matrix(a), as_matrix(b))


def ptrace(m: np.ndarray, dim_a: int, dim_b: int, keep: Literal["A", "B"]) -> np.ndarray:
    """Partial trace of any (not necessarily normalized) operator on A x B."""
    m = as_matrix(m)
    if m.shape != (dim_a * dim_b, dim_a * dim_b):
        raise DimensionError(f"operator of shape {m.shape} is not on a {dim_a}x{dim_b} system")
    t = m.reshape(dim_a, dim_b, dim_a, dim_b)
    if keep == "A":
        return np.einsum("ijkj->ik", t)
    if keep == "B":
        return np.einsum("ijil->jl", t)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


def partial_trace(rho: OperatorLike, dim_a: int, dim_b: int, keep: Literal["A", "B"]) -> DensityOperator:
    return DensityOperator(ptrace(as_matrix(rho), dim_a, dim_b, keep))


def _jacobi_rotation(app: float, aqq: float, apq: complex) -> np.ndarray:
    # phase q so the pivot becomes real, then a real Jacobi rotation that zeroes it
    g = abs(apq)
    e = apq / g
    theta = (aqq - app) / (2.0 * g)
    if abs(theta) > 1e150:
        t = 0.5 / theta
    else:
        t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c
    ec = e.conjugate()
    return np.array([[c, s], [-s * ec, c * ec]], dtype=complex)


def hermitian_eig(h: OperatorLike, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS):
    """Cyclic Jacobi eigendecomposition of a complex Hermitian matrix.

    Returns ``(Spectrum, V)`` with eigenvalues in descending order and the
    matching orthonormal eigenvectors as the columns of ``V``. Iteration stops
    once the off-diagonal Frobenius norm falls below ``tol * max(1, ||h||_F)``.
    """
    a = as_matrix(h)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"eigendecomposition needs a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n and np.max(np.abs(a - a.conj().T)) > HERMITIAN_TOL:
        raise NotHermitianError("hermitian_eig received a non-Hermitian matrix")
    a = 0.5 * (a + a.conj().T)
    v = np.eye(n, dtype=complex)
    threshold = tol * max(1.0, float(np.linalg.norm(a)))
    skip = 1e-4 * threshold / max(n, 1)
    offdiag = ~np.eye(n, dtype=bool)

    for _ in range(max_sweeps):
        off = float(np.linalg.norm(a[offdiag]))
        if off <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                u = _jacobi_rotation(a[p, p].real, a[q, q].real, apq)
                idx = [p, q]
                a[:, idx] = a[:, idx] @ u
                a[idx, :] = u.conj().T @ a[idx, :]
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                v[:, idx] = v[:, idx] @ u

    evals = np.real(np.diag(a))
    order = np.argsort(-evals, kind="stable")
    return Spectrum(evals[order]), v[:, order]


def shannon_entropy(s: Union[Spectrum, np.ndarray, list]) -> float:
    """-sum p log2 p with 0 log 0 = 0."""
    p = s.clipped() if isinstance(s, Spectrum) else Spectrum(s).clipped()
    p = p[p > 0]
    return float(-np.sum(p * np.log2(p))) + 0.0


def von_neumann_entropy(rho: OperatorLike) -> float:
    if not isinstance(rho, DensityOperator):
        rho = DensityOperator(rho)
    return shannon_entropy(rho.spectrum())


def swap_operator(d: int) -> np.ndarray:
    """Unitary on C^d x C^d exchanging the two factors."""
    if d < 2:
        raise DimensionError("swap needs d >= 2")
    s = np.zeros((d * d, d * d), dtype=complex)
    for i in range(d):
        for j in range(d):
            s[j * d + i, i * d + j] = 1.0
    return s


def commutator_norm(a: OperatorLike, b: OperatorLike) -> float:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape or a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"commutator needs equal square shapes, got {a.shape} and {b.shape}")
    return float(np.max(np.abs(a @ b - b @ a)))
