"""Rank-1 measurements and seeded random unitaries."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .errors import InvalidMeasurementError
from .linalg import HERMITIAN_TOL, hermitian_eig

COMPLETENESS_TOL = 1e-10
RANK_TOL = 1e-10

SeedLike = Union[int, Sequence[int], np.random.Generator, None]


def _rng(seed: SeedLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def _check_complete(elements: Sequence[np.ndarray], d: int) -> None:
    total = sum(elements)
    err = np.max(np.abs(total - np.eye(d)))
    if err > COMPLETENESS_TOL:
        raise InvalidMeasurementError(f"POVM elements sum to identity only within {err:.3g}")


@dataclass(frozen=True, eq=False)
class RankOneMeasurement:
    """Complete set of rank-1 positive operators on a d-dimensional system."""

    elements: tuple

    def __post_init__(self):
        elems = tuple(np.array(e, dtype=complex, copy=True) for e in self.elements)
        if not elems:
            raise InvalidMeasurementError("measurement has no elements")
        d = elems[0].shape[0]
        for e in elems:
            if e.shape != (d, d):
                raise InvalidMeasurementError("measurement elements have inconsistent shapes")
            if np.max(np.abs(e - e.conj().T)) > HERMITIAN_TOL:
                raise InvalidMeasurementError("measurement element is not Hermitian")
            lam = hermitian_eig(e)[0].values
            if lam[-1] < -RANK_TOL:
                raise InvalidMeasurementError("measurement element is not positive")
            if d > 1 and lam[1] > RANK_TOL:
                raise InvalidMeasurementError(f"measurement element has rank > 1 (lambda_2 = {lam[1]:.3g})")
            e.setflags(write=False)
        _check_complete(elems, d)
        object.__setattr__(self, "elements", elems)

    @property
    def dim(self) -> int:
        return self.elements[0].shape[0]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @classmethod
    def from_unitary(cls, u: np.ndarray) -> "RankOneMeasurement":
        """Projective measurement onto the columns of ``u``."""
        u = np.asarray(u, dtype=complex)
        return cls(tuple(np.outer(u[:, k], u[:, k].conj()) for k in range(u.shape[1])))

    @classmethod
    def computational(cls, d: int) -> "RankOneMeasurement":
        return cls.from_unitary(np.eye(d))


def povm_elements(m: Union[RankOneMeasurement, Sequence[np.ndarray]], d: int | None = None) -> tuple:
    """Validated tuple of POVM elements from a measurement or a raw operator list."""
    if isinstance(m, RankOneMeasurement):
        elems = m.elements
    else:
        elems = tuple(np.asarray(e, dtype=complex) for e in m)
        if not elems:
            raise InvalidMeasurementError("POVM has no elements")
        for e in elems:
            if e.ndim != 2 or e.shape[0] != e.shape[1]:
                raise InvalidMeasurementError("POVM elements must be square matrices")
            if np.max(np.abs(e - e.conj().T)) > HERMITIAN_TOL:
                raise InvalidMeasurementError("POVM element is not Hermitian")
            if hermitian_eig(e)[0].values[-1] < -RANK_TOL:
                raise InvalidMeasurementError("POVM element is not positive")
        _check_complete(elems, elems[0].shape[0])
    if d is not None and elems[0].shape[0] != d:
        raise InvalidMeasurementError(f"POVM acts on dimension {elems[0].shape[0]}, expected {d}")
    return elems


def random_unitary(d: int, seed: SeedLike = None) -> np.ndarray:
    """Haar-random unitary: QR of a complex Gaussian matrix with the phases of R fixed."""
    rng = _rng(seed)
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    ph = np.diag(r) / np.abs(np.diag(r))
    return q * ph


def random_rank1_projective(d: int, seed: SeedLike = None) -> RankOneMeasurement:
    if d < 2:
        raise ValueError("d must be >= 2")
    return RankOneMeasurement.from_unitary(random_unitary(d, seed))
