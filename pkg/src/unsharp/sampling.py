"""Seeded random states, bases and POVMs, plus a sampling-based minimizer.

Every generator accepts either an integer seed or a ``numpy.random.Generator``
so independent streams can be derived per trial. A fixed seed reproduces the
same draws within a build; downstream floats are compared with tolerances,
not bit-identity.
"""

from __future__ import annotations

import numpy as np

from .errors import DegenerateDraw
from .linalg import DensityMatrix
from .povm import Povm

_MAX_RETRIES = 100


def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_state_vector(d: int, seed) -> np.ndarray:
    """Unit vector from a rotation-invariant distribution (complex Gaussians)."""
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    rng = _rng(seed)
    for _ in range(_MAX_RETRIES):
        z = rng.normal(size=d) + 1j * rng.normal(size=d)
        norm = float(np.linalg.norm(z))
        if norm > 1e-12:
            return z / norm
    raise DegenerateDraw(f"no usable state vector in {_MAX_RETRIES} draws")


def random_pure_state(d: int, seed) -> DensityMatrix:
    """|psi><psi| for a rotation-invariant random unit vector psi."""
    psi = random_state_vector(d, seed)
    return DensityMatrix(np.outer(psi, psi.conj()))


def random_mixed_state(d: int, seed) -> DensityMatrix:
    """Mixture of d random pure states with flat random simplex weights."""
    rng = _rng(seed)
    weights = rng.dirichlet(np.ones(d))
    m = np.zeros((d, d), dtype=complex)
    for weight in weights:
        psi = random_state_vector(d, rng)
        m += weight * np.outer(psi, psi.conj())
    return DensityMatrix(m)


def random_basis(d: int, seed) -> np.ndarray:
    """Orthonormal basis (rows) from QR of a complex Gaussian matrix.

    The R-diagonal phases are absorbed so the distribution is rotation
    invariant. Draws with a near-singular R diagonal are retried.
    """
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    rng = _rng(seed)
    for _ in range(_MAX_RETRIES):
        z = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
        q, r = np.linalg.qr(z)
        diag = np.diagonal(r)
        if np.min(np.abs(diag)) < 1e-10:
            continue
        phases = diag / np.abs(diag)
        return (q * phases.conj()).T
    raise DegenerateDraw(f"no usable basis in {_MAX_RETRIES} draws")


def random_povm(d: int, n: int, seed) -> Povm:
    """n positive effects summing to identity via symmetric normalization.

    Draws Wishart-like positives G_i and returns S^{-1/2} G_i S^{-1/2} with
    S the sum, so completeness holds by construction.
    """
    if n < 2:
        raise ValueError(f"need at least 2 outcomes, got {n}")
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    rng = _rng(seed)
    for _ in range(_MAX_RETRIES):
        z = rng.normal(size=(n, d, d)) + 1j * rng.normal(size=(n, d, d))
        positives = np.einsum("nik,njk->nij", z, z.conj())
        total = positives.sum(axis=0)
        w, v = np.linalg.eigh(total)
        if float(w[0]) < 1e-10 * float(w[-1]):
            continue
        inv_sqrt = (v / np.sqrt(w)) @ v.conj().T
        effects = np.einsum("ab,nbc,cd->nad", inv_sqrt, positives, inv_sqrt)
        effects = (effects + np.conj(np.swapaxes(effects, 1, 2))) / 2.0
        return Povm(effects)
    raise DegenerateDraw(f"no usable POVM in {_MAX_RETRIES} draws")


def sampled_min(objective, d: int, trials: int, seed) -> float:
    """Minimum of an objective over random pure states.

    Upper-bounds the true minimum; for objectives linear in the state the
    true minimum is attained on a pure state, so the gap shrinks with more
    trials.
    """
    if trials < 1:
        raise ValueError(f"need at least 1 trial, got {trials}")
    rng = _rng(seed)
    best = np.inf
    for _ in range(trials):
        best = min(best, float(objective(random_pure_state(d, rng))))
    return best
