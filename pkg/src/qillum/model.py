"""States and codeword ensembles of conventional and entangled illumination."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, InvalidStateError
from .linalg import (
    DensityOperator,
    OperatorLike,
    Spectrum,
    as_matrix,
    ptrace,
    swap_operator,
    tensor,
)


@dataclass(frozen=True)
class IlluminationConfig:
    """Qudit dimension ``d``, target reflectivity ``eta`` and prior ``p0`` of target present."""

    d: int = 2
    eta: float = 0.5
    p0: float = 0.5

    def __post_init__(self):
        if int(self.d) != self.d or self.d < 2:
            raise ValueError(f"d must be an integer >= 2, got {self.d}")
        if not 0.0 <= self.eta <= 1.0:
            raise ValueError(f"eta must lie in [0, 1], got {self.eta}")
        if not 0.0 < self.p0 < 1.0:
            raise ValueError(f"p0 must lie in (0, 1), got {self.p0}")
        object.__setattr__(self, "d", int(self.d))
        object.__setattr__(self, "eta", float(self.eta))
        object.__setattr__(self, "p0", float(self.p0))

    @property
    def p1(self) -> float:
        return 1.0 - self.p0


@dataclass(frozen=True, eq=False)
class CodewordEnsemble:
    codeword0: DensityOperator
    codeword1: DensityOperator
    p0: float = 0.5

    def __post_init__(self):
        for name in ("codeword0", "codeword1"):
            rho = getattr(self, name)
            if not isinstance(rho, DensityOperator):
                object.__setattr__(self, name, DensityOperator(rho))
        if self.codeword0.dim != self.codeword1.dim:
            raise DimensionError("codewords must have equal dimension")
        if not 0.0 <= self.p0 <= 1.0:
            raise ValueError(f"prior p0 must lie in [0, 1], got {self.p0}")

    @property
    def p1(self) -> float:
        return 1.0 - self.p0

    @property
    def dim(self) -> int:
        return self.codeword0.dim

    @property
    def priors(self) -> tuple[float, float]:
        return (self.p0, self.p1)

    @property
    def codewords(self) -> tuple[DensityOperator, DensityOperator]:
        return (self.codeword0, self.codeword1)

    def average(self) -> DensityOperator:
        return DensityOperator(self.p0 * self.codeword0.matrix + self.p1 * self.codeword1.matrix)


def maximally_entangled(d: int) -> DensityOperator:
    """Projector onto d^(-1/2) sum_k |k>|k>."""
    if d < 2:
        raise DimensionError("d must be >= 2")
    psi = np.eye(d, dtype=complex).ravel() / np.sqrt(d)
    return DensityOperator(np.outer(psi, psi.conj()))


def maximally_mixed(d: int) -> DensityOperator:
    if d < 2:
        raise DimensionError("d must be >= 2")
    return DensityOperator(np.eye(d, dtype=complex) / d)


def isotropic_state(d: int, f: float) -> DensityOperator:
    """f * Psi + (1 - f) * I/d^2 on two qudits."""
    _check_weight(f)
    return DensityOperator(f * maximally_entangled(d).matrix + (1 - f) * np.eye(d * d) / d**2)


def conventional_codewords(cfg: IlluminationConfig, probe: OperatorLike) -> CodewordEnsemble:
    """Output codewords of a single probe: eta*probe + (1-eta)*I/d, or I/d."""
    phi = as_matrix(probe)
    if phi.shape != (cfg.d, cfg.d):
        raise DimensionError(f"probe of shape {phi.shape} does not match d={cfg.d}")
    noise = np.eye(cfg.d, dtype=complex) / cfg.d
    return CodewordEnsemble(
        DensityOperator(cfg.eta * phi + (1 - cfg.eta) * noise),
        DensityOperator(noise),
        cfg.p0,
    )


def quantum_codewords(cfg: IlluminationConfig) -> CodewordEnsemble:
    """Signal-idler codewords when the signal arm of a maximally entangled pair is sent."""
    d = cfg.d
    noise = np.eye(d * d, dtype=complex) / d**2
    return CodewordEnsemble(
        DensityOperator(cfg.eta * maximally_entangled(d).matrix + (1 - cfg.eta) * noise),
        DensityOperator(noise),
        cfg.p0,
    )


def swap_signal_environment(d: int) -> np.ndarray:
    """SWAP between the first and third qudit of A x B x E."""
    s_ab = np.kron(swap_operator(d), np.eye(d))
    s_be = np.kron(np.eye(d), swap_operator(d))
    return s_ab @ s_be @ s_ab


def circuit_codeword(cfg: IlluminationConfig, x: int) -> DensityOperator:
    """Codeword x produced by the circuit model: mix in noise, then apply SWAP^x on A and E.

    The noise-mixing stage is taken as the convex combination itself; only the
    target-encoding stage is realized as a unitary on the tripartite state.
    """
    if x not in (0, 1):
        raise ValueError(f"x must be 0 or 1, got {x}")
    d = cfg.d
    rho_ab = quantum_codewords(cfg).codeword0.matrix
    sigma = tensor(rho_ab, np.eye(d) / d)
    if x == 1:
        s = swap_signal_environment(d)
        sigma = s @ sigma @ s.conj().T
    return DensityOperator(ptrace(sigma, d * d, d, keep="A"))


def isotropic_spectra(d: int, f: float) -> tuple[Spectrum, Spectrum]:
    """Closed-form spectra for weight ``f`` on the maximally entangled (or pure) component.

    ``joint`` is the spectrum of f*Psi + (1-f)*I/d^2. ``conditional`` is the
    spectrum of f*phi + (1-f)*I/d for any pure qudit state phi, i.e. of every
    post-measurement signal state after a rank-1 idler measurement.
    """
    _check_weight(f)
    joint = np.full(d * d, (1 - f) / d**2)
    joint[0] = f + (1 - f) / d**2
    conditional = np.full(d, (1 - f) / d)
    conditional[0] = f + (1 - f) / d
    return Spectrum(joint), Spectrum(conditional)


def _check_weight(f: float) -> None:
    if not 0.0 <= f <= 1.0:
        raise InvalidStateError(f"mixing weight must lie in [0, 1], got {f}")
