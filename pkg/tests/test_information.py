import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qillum.errors import InvalidMeasurementError, NoClosedFormError
from qillum.information import (
    classical_channel_mi,
    conventional_information,
    conventional_performance,
    holevo_chi,
    performance_report,
    quantum_performance,
    restricted_performance,
    shannon_distinguishability,
)
from qillum.linalg import hermitian_eig, ket, projector
from qillum.measurements import RankOneMeasurement, random_rank1_projective, random_unitary
from qillum.model import CodewordEnsemble, IlluminationConfig, conventional_codewords, isotropic_spectra, quantum_codewords

from conftest import random_density

# Frozen from direct enumeration of the closed-form spectra, e.g.
# I_q(d=2, eta=.5, p0=.5) = H{.4375,.1875^3} - .5 H{.625,.125^3} - 1.
IQ_ETA1 = 0.548794940695
IC_ETA1 = 0.311278124459
IQ_ETA05 = 0.105843344596
IC_ETA05 = 0.048794940695
MI_DIAG = 0.001808652049  # diag(.55,.45) vs I/2, computational basis, uniform priors


def _entropy_lapack(m):
    lam = np.clip(np.linalg.eigvalsh(m), 0, None)
    lam = lam[lam > 0]
    return float(-np.sum(lam * np.log2(lam)))


def _chi_lapack(e):
    avg = e.p0 * e.codeword0.matrix + e.p1 * e.codeword1.matrix
    return _entropy_lapack(avg) - e.p0 * _entropy_lapack(e.codeword0.matrix) - e.p1 * _entropy_lapack(e.codeword1.matrix)


def test_holevo_examples():
    half = np.eye(2) / 2
    assert holevo_chi(CodewordEnsemble(half, half)) == pytest.approx(0.0, abs=1e-15)
    assert holevo_chi(CodewordEnsemble(projector(ket(2, 0)), projector(ket(2, 1)))) == pytest.approx(1.0, abs=1e-15)
    assert holevo_chi(quantum_codewords(IlluminationConfig(2, 1.0, 0.5))) == pytest.approx(IQ_ETA1, abs=1e-11)


@given(seed=st.integers(0, 2**32 - 1), d=st.integers(2, 4), p0=st.floats(0.05, 0.95))
def test_holevo_bounds_and_lapack(seed, d, p0):
    rng = np.random.default_rng(seed)
    e = CodewordEnsemble(random_density(rng, d), random_density(rng, d), p0)
    chi = holevo_chi(e)
    h = -p0 * math.log2(p0) - (1 - p0) * math.log2(1 - p0)
    assert -1e-12 <= chi <= h + 1e-12
    assert chi == pytest.approx(_chi_lapack(e), abs=1e-11)


def test_shannon_distinguishability():
    cfg = IlluminationConfig(2, 1.0, 0.5)
    assert shannon_distinguishability(conventional_codewords(cfg, projector(ket(2, 0)))) == pytest.approx(IC_ETA1, abs=1e-11)
    e = quantum_codewords(IlluminationConfig(3, 0.4, 0.3))
    assert shannon_distinguishability(e) == holevo_chi(e)
    plus = projector([1, 1])
    with pytest.raises(NoClosedFormError, match="no closed form"):
        shannon_distinguishability(CodewordEnsemble(projector(ket(2, 0)), plus))


@pytest.mark.parametrize(
    "eta,expected",
    [(0.0, 0.0), (1.0, IC_ETA1), (0.5, IC_ETA05)],
)
def test_conventional_performance(eta, expected):
    assert conventional_performance(IlluminationConfig(2, eta, 0.5)) == pytest.approx(expected, abs=1e-11)


@pytest.mark.parametrize(
    "eta,expected",
    [(0.0, 0.0), (1.0, IQ_ETA1), (0.5, IQ_ETA05)],
)
def test_quantum_performance(eta, expected):
    assert quantum_performance(IlluminationConfig(2, eta, 0.5)) == pytest.approx(expected, abs=1e-11)


@given(d=st.integers(2, 5), eta=st.floats(0, 1, allow_subnormal=False), p0=st.floats(0.01, 0.99))
@settings(max_examples=60)
def test_performances_against_spectra(d, eta, p0):
    cfg = IlluminationConfig(d, eta, p0)
    h = lambda f: -sum(x * math.log2(x) for x in isotropic_spectra(d, f)[1].values if x > 0)
    closed = h(p0 * eta) - p0 * h(eta) - (1 - p0) * math.log2(d)
    assert conventional_performance(cfg) == pytest.approx(closed, abs=1e-12)
    assert quantum_performance(cfg) == pytest.approx(holevo_chi(quantum_codewords(cfg)), abs=1e-12)


def test_restricted_performance_examples():
    cfg = IlluminationConfig(2, 1.0, 0.5)
    assert restricted_performance(cfg, RankOneMeasurement.computational(2)) == pytest.approx(IC_ETA1, abs=1e-11)
    assert restricted_performance(cfg, random_rank1_projective(2, 7)) == pytest.approx(IC_ETA1, abs=1e-11)
    assert restricted_performance(IlluminationConfig(3, 0.0, 0.5), random_rank1_projective(3, 1)) == pytest.approx(0, abs=1e-14)


def test_restricted_performance_rejects_incomplete():
    with pytest.raises(InvalidMeasurementError):
        RankOneMeasurement((projector(ket(2, 0)),))
    with pytest.raises(InvalidMeasurementError):
        RankOneMeasurement((np.eye(2),))


@pytest.mark.parametrize("d,eta,p0", [(2, 0.3, 0.5), (3, 0.7, 0.25), (4, 0.5, 0.9)])
def test_restricted_equals_conventional(d, eta, p0):
    cfg = IlluminationConfig(d, eta, p0)
    best = conventional_performance(cfg)
    for k in range(50):
        assert abs(restricted_performance(cfg, random_rank1_projective(d, [3, k])) - best) <= 1e-9


def test_classical_channel_mi_examples():
    e = CodewordEnsemble(np.diag([0.55, 0.45]), np.eye(2) / 2)
    assert classical_channel_mi(e, RankOneMeasurement.computational(2)) == pytest.approx(MI_DIAG, abs=1e-11)
    assert classical_channel_mi(e, [np.eye(2)]) == 0.0
    q = quantum_codewords(IlluminationConfig(2, 0.6, 0.3))
    _, v = hermitian_eig(q.average())
    assert classical_channel_mi(q, RankOneMeasurement.from_unitary(v)) == pytest.approx(holevo_chi(q), abs=1e-9)
    with pytest.raises(InvalidMeasurementError):
        classical_channel_mi(e, [np.eye(2), np.eye(2)])
    with pytest.raises(InvalidMeasurementError):
        classical_channel_mi(e, RankOneMeasurement.computational(3))


def test_classical_channel_mi_general_povm():
    # trine POVM: three rank-1 elements on a qubit
    vecs = [np.array([math.cos(t), math.sin(t)]) for t in (0, 2 * math.pi / 3, 4 * math.pi / 3)]
    trine = [2 / 3 * projector(v) for v in vecs]
    e = CodewordEnsemble(projector(ket(2, 0)), projector([1, 1]))
    assert 0 < classical_channel_mi(e, trine) <= holevo_chi(e) + 1e-9


@given(seed=st.integers(0, 2**32 - 1), d=st.integers(2, 4))
def test_data_processing(seed, d):
    rng = np.random.default_rng(seed)
    e = CodewordEnsemble(random_density(rng, d), random_density(rng, d), float(rng.uniform(0.1, 0.9)))
    m = RankOneMeasurement.from_unitary(random_unitary(d, rng))
    assert classical_channel_mi(e, m) <= holevo_chi(e) + 1e-9


def test_unitary_invariance_and_pure_optimality():
    cfg = IlluminationConfig(3, 0.4, 0.35)
    base = conventional_performance(cfg)
    rng = np.random.default_rng(11)
    for _ in range(100):
        u = random_unitary(3, rng)
        probe = u @ projector(ket(3, 0)) @ u.conj().T
        assert abs(conventional_information(cfg, probe) - base) <= 1e-12
    for _ in range(100):
        assert conventional_information(cfg, random_density(rng, 3)) <= base + 1e-12


def test_performance_report():
    rep = performance_report(IlluminationConfig(2, 0.5, 0.5))
    assert rep.delta_i == rep.i_q - rep.i_c_max
    assert rep.i_c_restricted == pytest.approx(rep.i_c_max, abs=1e-12)
    assert rep.spectra["conditional_eta"] == [0.75, 0.25]
    assert min(rep.i_q, rep.i_c_max, rep.i_c_restricted, rep.delta_i) >= -1e-12
