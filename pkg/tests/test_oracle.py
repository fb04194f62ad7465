import numpy as np
import pytest

from qillum.discord import discord_isotropic
from qillum.information import classical_channel_mi, holevo_chi
from qillum.linalg import ket, projector, tensor, von_neumann_entropy
from qillum.measurements import RankOneMeasurement, random_rank1_projective, random_unitary
from qillum.model import CodewordEnsemble, IlluminationConfig, conventional_codewords, isotropic_state, maximally_entangled
from qillum.oracle import (
    SearchSettings,
    brute_force_discord,
    conditional_entropy_search,
    optimize_accessible_info,
    optimize_conditional_entropy,
    sample_conditional_entropies,
    search_unitary,
)

from conftest import random_density

QUICK = SearchSettings(seed=1, restarts=4, grid_resolution=4, refine_iterations=150)


def test_random_projective_contract():
    for d in (2, 3, 5):
        m = random_rank1_projective(d, 123)
        assert np.max(np.abs(sum(m.elements) - np.eye(d))) <= 1e-10
        for el in m:
            assert np.max(np.abs(el @ el - el)) <= 1e-10
        again = random_rank1_projective(d, 123)
        assert all(np.array_equal(a, b) for a, b in zip(m, again))


def test_random_unitary_is_unitary():
    u = random_unitary(6, 0)
    assert np.max(np.abs(u.conj().T @ u - np.eye(6))) <= 1e-13


def test_settings_validation():
    with pytest.raises(ValueError):
        SearchSettings(restarts=0)
    with pytest.raises(ValueError):
        SearchSettings(convergence_tol=0)


def test_accessible_info_examples():
    val, m = optimize_accessible_info(CodewordEnsemble(projector(ket(2, 0)), projector(ket(2, 1))), QUICK)
    assert val == pytest.approx(1.0, abs=1e-9)
    assert isinstance(m, RankOneMeasurement)
    e = conventional_codewords(IlluminationConfig(2, 1.0, 0.5), projector(ket(2, 0)))
    val, m = optimize_accessible_info(e, QUICK)
    assert val == pytest.approx(0.311278124459, abs=1e-6)
    assert classical_channel_mi(e, m) == pytest.approx(val, abs=1e-12)
    val, _ = optimize_accessible_info(CodewordEnsemble(np.eye(2) / 2, np.eye(2) / 2), QUICK)
    assert val == pytest.approx(0.0, abs=1e-12)


def test_accessible_info_never_exceeds_holevo(rng):
    for d in (2, 3):
        e = CodewordEnsemble(random_density(rng, d), random_density(rng, d), 0.4)
        val, _ = optimize_accessible_info(e, QUICK)
        assert val <= holevo_chi(e) + 1e-9


def test_conditional_entropy_examples(rng):
    rho_a = random_density(rng, 2)
    val, _, flat = optimize_conditional_entropy(tensor(rho_a, random_density(rng, 2)), 2, 2, QUICK)
    assert val == pytest.approx(von_neumann_entropy(rho_a), abs=1e-12)
    assert flat <= 1e-12
    val, _, flat = optimize_conditional_entropy(isotropic_state(2, 0.5), 2, 2, QUICK)
    assert val == pytest.approx(0.811278124459, abs=1e-6)
    assert flat <= 1e-9
    val, _, _ = optimize_conditional_entropy(maximally_entangled(2), 2, 2, QUICK)
    assert val == pytest.approx(0.0, abs=1e-6)


def test_conditional_entropy_finds_non_flat_minimum():
    # classical-quantum state: optimal B measurement is the computational basis, random ones do worse
    rho = 0.5 * tensor(projector(ket(2, 0)), projector(ket(2, 0))) + 0.5 * tensor(projector(ket(2, 1)), projector(ket(2, 1)))
    res = conditional_entropy_search(rho, 2, 2, QUICK)
    assert res.value == pytest.approx(0.0, abs=1e-6)
    assert res.flatness > 0.1


def test_brute_force_discord_examples(rng):
    assert brute_force_discord(tensor(random_density(rng, 2), random_density(rng, 2)), 2, 2, QUICK) == pytest.approx(0, abs=1e-6)
    assert brute_force_discord(isotropic_state(2, 1.0), 2, 2, QUICK) == pytest.approx(1.0, abs=1e-5)
    assert brute_force_discord(isotropic_state(2, 0.5), 2, 2, QUICK) == pytest.approx(discord_isotropic(2, 0.5), abs=1e-5)


def test_search_determinism():
    e = conventional_codewords(IlluminationConfig(3, 0.6, 0.4), projector(random_unitary(3, 4)[:, 0]))
    a = optimize_accessible_info(e, QUICK)
    b = optimize_accessible_info(e, QUICK)
    assert a[0] == b[0]
    assert all(np.array_equal(x, y) for x, y in zip(a[1], b[1]))


def test_restart_monotonicity():
    e = conventional_codewords(IlluminationConfig(3, 0.5, 0.5), projector(random_unitary(3, 8)[:, 0]))
    best = []
    for r in range(1, 7):
        val, _ = optimize_accessible_info(e, SearchSettings(seed=2, restarts=r, grid_resolution=2, refine_iterations=20))
        best.append(val)
    assert all(b >= a for a, b in zip(best, best[1:]))


def test_search_unitary_minimize():
    target = random_unitary(2, 0)[:, 0]
    res = search_unitary(lambda u: 1 - abs(np.vdot(target, u[:, 0])) ** 2, 2, QUICK, maximize=False)
    assert res.value <= 1e-8
    assert res.evaluations > 0 and len(res.restart_values) == QUICK.restarts


@pytest.mark.parametrize("d", [2, 3])
def test_sampled_flatness(d):
    vals = sample_conditional_entropies(isotropic_state(d, 0.7), d, d, 100, seed=0)
    assert np.std(vals, ddof=1) <= 1e-9
