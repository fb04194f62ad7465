"""Two-qubit concurrence and entanglement of formation."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError
from .linalg import DensityOperator, OperatorLike, hermitian_eig, shannon_entropy

ZERO_TOL = 1e-12

_SIGMA_Y = np.array([[0, -1j], [1j, 0]])
_YY = np.kron(_SIGMA_Y, _SIGMA_Y)


@dataclass(frozen=True)
class EntanglementReport:
    concurrence: float
    eof: float


def _two_qubit(rho: OperatorLike) -> np.ndarray:
    if not isinstance(rho, DensityOperator):
        rho = DensityOperator(rho)
    if rho.dim != 4:
        raise DimensionError(f"two-qubit state required, got dimension {rho.dim}")
    return rho.matrix


def _psd_sqrt(m: np.ndarray) -> np.ndarray:
    spec, v = hermitian_eig(m)
    lam = np.sqrt(spec.clipped())
    return (v * lam) @ v.conj().T


def concurrence(rho: OperatorLike) -> float:
    """Wootters concurrence, with spin flip taken in the computational basis.

    The square roots of the eigenvalues of rho * flip(rho) are obtained from the
    Hermitian matrix sqrt(rho) flip(rho) sqrt(rho), which has the same spectrum.
    Values below 1e-12 are reported as exactly zero.
    """
    m = _two_qubit(rho)
    flipped = _YY @ m.conj() @ _YY
    root = _psd_sqrt(m)
    r = root @ flipped @ root
    lam = hermitian_eig(0.5 * (r + r.conj().T))[0].clipped()
    s = np.sqrt(lam)
    c = s[0] - s[1] - s[2] - s[3]
    return 0.0 if c <= ZERO_TOL else min(float(c), 1.0)


def eof_from_concurrence(c: float) -> float:
    if c <= 0:
        return 0.0
    x = 0.5 * (1 + math.sqrt(max(1 - c * c, 0.0)))
    return shannon_entropy([x, 1 - x])


def entanglement_of_formation(rho: OperatorLike) -> float:
    return eof_from_concurrence(concurrence(rho))


def entanglement_report(rho: OperatorLike) -> EntanglementReport:
    c = concurrence(rho)
    return EntanglementReport(concurrence=c, eof=eof_from_concurrence(c))
