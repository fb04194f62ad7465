"""Holevo information, accessible information and illumination performances (bits)."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence, Union

import numpy as np

from .errors import InvalidStateError, NoClosedFormError
from .linalg import (
    OperatorLike,
    commutator_norm,
    ket,
    projector,
    ptrace,
    shannon_entropy,
    von_neumann_entropy,
)
from .measurements import RankOneMeasurement, povm_elements
from .model import (
    CodewordEnsemble,
    IlluminationConfig,
    conventional_codewords,
    isotropic_spectra,
    maximally_entangled,
)

COMMUTE_TOL = 1e-10
PURITY_TOL = 1e-10


@dataclass(frozen=True)
class PerformanceReport:
    d: int
    eta: float
    p0: float
    i_q: float
    i_c_max: float
    i_c_restricted: float
    delta_i: float
    spectra: dict = field(default_factory=dict, compare=False, repr=False)


def holevo_chi(e: CodewordEnsemble) -> float:
    """S(average) - sum_x p_x S(rho_x)."""
    chi = von_neumann_entropy(e.average())
    for p, rho in zip(e.priors, e.codewords):
        if p > 0:
            chi -= p * von_neumann_entropy(rho)
    return chi


def shannon_distinguishability(e: CodewordEnsemble, tol: float = COMMUTE_TOL) -> float:
    """Accessible information of a two-codeword ensemble, exact for commuting codewords only.

    Raises NoClosedFormError otherwise; the Holevo quantity is then only an upper
    bound and :func:`qillum.oracle.optimize_accessible_info` gives a lower bound.
    """
    gap = commutator_norm(e.codeword0, e.codeword1)
    if gap > tol:
        raise NoClosedFormError(
            f"codewords do not commute (||[rho0, rho1]||_max = {gap:.3g}); no closed form, "
            "use qillum.oracle.optimize_accessible_info"
        )
    return holevo_chi(e)


def classical_channel_mi(e: CodewordEnsemble, m: Union[RankOneMeasurement, Sequence[np.ndarray]]) -> float:
    """Mutual information between the codeword label and the outcome of measurement ``m``."""
    elems = povm_elements(m, e.dim)
    joint = np.array(
        [[p * np.real(np.trace(rho.matrix @ el)) for el in elems] for p, rho in zip(e.priors, e.codewords)]
    )
    return _mutual_information(joint)


def _mutual_information(joint: np.ndarray) -> float:
    joint = np.where(joint < 0, 0.0, joint)
    px = joint.sum(axis=1, keepdims=True)
    pb = joint.sum(axis=0, keepdims=True)
    mask = joint > 0
    ratio = joint[mask] / (px @ pb)[mask]
    return float(np.sum(joint[mask] * np.log2(ratio))) + 0.0


def conventional_information(cfg: IlluminationConfig, probe: OperatorLike) -> float:
    """Holevo information of the conventional codewords for a given (pure or mixed) probe."""
    return holevo_chi(conventional_codewords(cfg, probe))


def conventional_performance(cfg: IlluminationConfig) -> float:
    # every pure probe is optimal and equivalent, so |0><0| stands in for all of them
    return conventional_information(cfg, projector(ket(cfg.d, 0)))


def quantum_performance(cfg: IlluminationConfig) -> float:
    d, p0, p1 = cfg.d, cfg.p0, cfg.p1
    avg_joint = isotropic_spectra(d, p0 * cfg.eta)[0]
    rho0_joint = isotropic_spectra(d, cfg.eta)[0]
    return shannon_entropy(avg_joint) - p0 * shannon_entropy(rho0_joint) - p1 * 2 * math.log2(d)


def idler_conditional_probes(d: int, m: RankOneMeasurement) -> list[tuple[float, np.ndarray]]:
    """Outcome probabilities q_b and pure signal states left by measuring the idler of Psi_AB."""
    elems = povm_elements(m, d)
    psi = maximally_entangled(d).matrix
    out = []
    for el in elems:
        unnorm = ptrace(psi @ np.kron(np.eye(d), el), d, d, keep="A")
        unnorm = 0.5 * (unnorm + unnorm.conj().T)
        q = float(np.real(np.trace(unnorm)))
        if q <= 1e-15:
            continue
        state = unnorm / q
        purity = float(np.real(np.trace(state @ state)))
        if purity < 1 - PURITY_TOL:
            raise InvalidStateError(f"conditional signal state is not pure (purity {purity:.12g})")
        out.append((q, state))
    return out


def restricted_performance(cfg: IlluminationConfig, m: RankOneMeasurement) -> float:
    """Information when the idler is measured with ``m`` before the signal is sent.

    Each outcome b leaves a pure probe on the signal, which is then used
    conventionally; the result is the outcome-weighted conventional information.
    """
    return float(sum(q * conventional_information(cfg, probe) for q, probe in idler_conditional_probes(cfg.d, m)))


def performance_report(cfg: IlluminationConfig, m: RankOneMeasurement | None = None) -> PerformanceReport:
    if m is None:
        m = RankOneMeasurement.computational(cfg.d)
    i_q = quantum_performance(cfg)
    i_c = conventional_performance(cfg)
    return PerformanceReport(
        d=cfg.d,
        eta=cfg.eta,
        p0=cfg.p0,
        i_q=i_q,
        i_c_max=i_c,
        i_c_restricted=restricted_performance(cfg, m),
        delta_i=i_q - i_c,
        spectra={
            "joint_eta": isotropic_spectra(cfg.d, cfg.eta)[0].values.tolist(),
            "joint_p0_eta": isotropic_spectra(cfg.d, cfg.p0 * cfg.eta)[0].values.tolist(),
            "conditional_eta": isotropic_spectra(cfg.d, cfg.eta)[1].values.tolist(),
            "conditional_p0_eta": isotropic_spectra(cfg.d, cfg.p0 * cfg.eta)[1].values.tolist(),
        },
    )
