"""Brute-force measurement searches used as independent ground truth.

The search space is rank-1 projective measurements, i.e. orthonormal bases
given by the columns of a unitary. Each restart draws a handful of random
bases, keeps the best, and refines it with random Hermitian kicks whose size
grows on success and shrinks on failure. Restart r is seeded by (seed, r), so a
given restart always follows the same path regardless of how many others run.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DimensionError
from .information import _mutual_information
from .linalg import OperatorLike, as_matrix, hermitian_eig, shannon_entropy, von_neumann_entropy, ptrace
from .measurements import RankOneMeasurement, random_unitary
from .model import CodewordEnsemble


@dataclass(frozen=True)
class SearchSettings:
    seed: int = 0
    restarts: int = 16
    grid_resolution: int = 8
    refine_iterations: int = 200
    convergence_tol: float = 1e-9
    initial_step: float = 0.3

    def __post_init__(self):
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")
        if self.grid_resolution < 1:
            raise ValueError("grid_resolution must be >= 1")
        if self.refine_iterations < 0:
            raise ValueError("refine_iterations must be >= 0")
        if self.convergence_tol <= 0:
            raise ValueError("convergence_tol must be > 0")


@dataclass
class SearchResult:
    value: float
    unitary: np.ndarray
    restart_values: list
    sampled_min: float
    sampled_max: float
    evaluations: int

    @property
    def measurement(self) -> RankOneMeasurement:
        return RankOneMeasurement.from_unitary(self.unitary)

    @property
    def flatness(self) -> float:
        return self.sampled_max - self.sampled_min


def _cayley(k: np.ndarray) -> np.ndarray:
    eye = np.eye(k.shape[0])
    return np.linalg.solve(eye - 0.5j * k, eye + 0.5j * k)


def _random_hermitian(d: int, rng: np.random.Generator) -> np.ndarray:
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    h = 0.5 * (g + g.conj().T)
    return h / np.linalg.norm(h)


def search_unitary(
    objective: Callable[[np.ndarray], float], d: int, s: SearchSettings, maximize: bool = True
) -> SearchResult:
    sign = 1.0 if maximize else -1.0
    best_val, best_u = -np.inf, None
    restart_values = []
    lo, hi, n_eval = np.inf, -np.inf, 0

    def score(u):
        nonlocal lo, hi, n_eval
        v = objective(u)
        lo, hi, n_eval = min(lo, v), max(hi, v), n_eval + 1
        return sign * v

    for r in range(s.restarts):
        rng = np.random.default_rng([s.seed, r])
        starts = [random_unitary(d, rng) for _ in range(s.grid_resolution)]
        if r == 0:
            starts.insert(0, np.eye(d, dtype=complex))
        scored = [(score(u), i) for i, u in enumerate(starts)]
        val, i = max(scored)
        u = starts[i]

        step = s.initial_step
        for _ in range(s.refine_iterations):
            if step < s.convergence_tol:
                break
            # antithetic pair: try the reverse direction before shrinking the step
            k = step * _random_hermitian(d, rng)
            for trial in (u @ _cayley(k), u @ _cayley(-k)):
                tv = score(trial)
                if tv > val:
                    u, val = trial, tv
                    step = min(1.5 * step, 1.0)
                    break
            else:
                step *= 0.85

        restart_values.append(sign * val)
        if val > best_val:
            best_val, best_u = val, u

    return SearchResult(sign * best_val, best_u, restart_values, lo, hi, n_eval)


def optimize_accessible_info(e: CodewordEnsemble, s: SearchSettings = SearchSettings()):
    """Best classical mutual information over projective measurements (a lower bound)."""
    rhos = [rho.matrix for rho in e.codewords]
    priors = np.array(e.priors)

    def mi(u):
        probs = np.array([np.real(np.einsum("ik,ij,jk->k", u.conj(), rho, u)) for rho in rhos])
        return _mutual_information(priors[:, None] * probs)

    res = search_unitary(mi, e.dim, s, maximize=True)
    return res.value, res.measurement


def _conditional_entropy_fn(rho: np.ndarray, dim_a: int, dim_b: int):
    t = rho.reshape(dim_a, dim_b, dim_a, dim_b)

    def cond(u):
        blocks = np.einsum("abcd,bk,dk->kac", t, u.conj(), u)
        total = 0.0
        for blk in blocks:
            blk = 0.5 * (blk + blk.conj().T)
            q = float(np.real(np.trace(blk)))
            if q > 1e-15:
                total += q * shannon_entropy(hermitian_eig(blk / q)[0])
        return total

    return cond


def conditional_entropy_search(rho: OperatorLike, dim_a: int, dim_b: int, s: SearchSettings = SearchSettings()):
    m = as_matrix(rho)
    if m.shape != (dim_a * dim_b, dim_a * dim_b):
        raise DimensionError(f"state of shape {m.shape} is not on a {dim_a}x{dim_b} system")
    return search_unitary(_conditional_entropy_fn(m, dim_a, dim_b), dim_b, s, maximize=False)


def optimize_conditional_entropy(rho: OperatorLike, dim_a: int, dim_b: int, s: SearchSettings = SearchSettings()):
    """Minimum of sum_b q_b S(A|b) over projective measurements on B.

    Returns ``(value, measurement, flatness)`` where flatness is the spread
    (max - min) of every conditional entropy evaluated during the search.
    """
    res = conditional_entropy_search(rho, dim_a, dim_b, s)
    return res.value, res.measurement, res.flatness


def sample_conditional_entropies(rho: OperatorLike, dim_a: int, dim_b: int, n: int, seed: int = 0) -> np.ndarray:
    """Conditional entropies under ``n`` seeded Haar-random projective measurements on B."""
    cond = _conditional_entropy_fn(as_matrix(rho), dim_a, dim_b)
    return np.array([cond(random_unitary(dim_b, [seed, k])) for k in range(n)])


def brute_force_discord(rho: OperatorLike, dim_a: int, dim_b: int, s: SearchSettings = SearchSettings()) -> float:
    """S(B) - S(AB) + min conditional entropy, with the minimum found by search."""
    m = as_matrix(rho)
    cond, _, _ = optimize_conditional_entropy(m, dim_a, dim_b, s)
    return von_neumann_entropy(ptrace(m, dim_a, dim_b, "B")) - von_neumann_entropy(m) + cond
