"""Entropy functionals over measurement outcomes.

All entropies are in bits (base-2 logarithms) throughout the package, with
the 0 log 0 = 0 convention.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch
from .linalg import TOL_PSD, require_unit_vector
from .povm import Povm, QubitPovmParams


def entropy_term(x):
    """Pointwise -x log2(x) with 0 log 0 = 0; accepts scalars or arrays."""
    x = np.asarray(x, dtype=float)
    safe = np.where(x > 0.0, x, 1.0)
    return np.where(x > 0.0, -safe * np.log2(safe), 0.0)


def _state_matrix(rho) -> np.ndarray:
    return np.asarray(rho, dtype=complex)


def outcome_probs(rho, povm: Povm) -> np.ndarray:
    """Outcome distribution p_i = Tr[rho A_i], clamped to [0, 1]."""
    rho = _state_matrix(rho)
    if rho.shape != (povm.dim, povm.dim):
        raise DimensionMismatch(f"state shape {rho.shape} does not match POVM dim {povm.dim}")
    probs = np.einsum("ij,nji->n", rho, povm.effects).real
    if probs.min() < -TOL_PSD or probs.max() > 1.0 + TOL_PSD:
        raise ValueError(f"outcome probabilities outside [0, 1]: {probs}")
    probs = np.clip(probs, 0.0, 1.0)
    total = float(probs.sum())
    if abs(total - 1.0) > 1e-10:
        raise ValueError(f"outcome probabilities sum to {total:.12f}, expected 1")
    return probs


def shannon_entropy(probs) -> float:
    """H = -sum_i p_i log2 p_i of a probability distribution, in bits."""
    p = np.asarray(probs, dtype=float)
    if p.min() < -TOL_PSD:
        raise ValueError(f"negative probability {p.min():.3e}")
    total = float(p.sum())
    if abs(total - 1.0) > 1e-8:
        raise ValueError(f"probabilities sum to {total:.10f}, expected 1")
    return float(np.sum(entropy_term(np.clip(p, 0.0, 1.0))))


def binary_entropy(p: float) -> float:
    """H_bin(p) = -p log2 p - (1-p) log2 (1-p)."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability must be in [0, 1], got {p}")
    return float(entropy_term(p) + entropy_term(1.0 - p))


def von_neumann_entropy(rho) -> float:
    """S(rho) = -Tr[rho log2 rho] in bits."""
    w = np.linalg.eigvalsh(_state_matrix(rho))
    return float(np.sum(entropy_term(np.clip(w, 0.0, 1.0))))


def device_uncertainty(rho, povm: Povm) -> float:
    """Entropic unsharpness of a measurement, averaged over the state.

    Sums -a log2(a) over every effect eigenvalue a, weighted by the overlap
    <v|rho|v> of the state with the corresponding eigenvector. Vanishes for
    every state exactly when the measurement is projective, and never exceeds
    the outcome entropy.
    """
    rho = _state_matrix(rho)
    if rho.shape != (povm.dim, povm.dim):
        raise DimensionMismatch(f"state shape {rho.shape} does not match POVM dim {povm.dim}")
    total = 0.0
    for dec in povm.spectra:
        weights = np.einsum("ki,ij,kj->k", dec.vectors.conj(), rho, dec.vectors).real
        total += float(weights @ entropy_term(dec.eigenvalues))
    return total


def device_uncertainty_qubit(psi, params: QubitPovmParams) -> float:
    """Binary-entropy form of the device uncertainty for the Bloch model.

    Averages H_bin of the conditional outcome probabilities over the
    populations of psi in the two a_vec . sigma eigenstates. Agrees with
    ``device_uncertainty`` on |psi><psi| and ``qubit_povm(params)``.
    """
    psi = require_unit_vector(psi)
    if psi.shape != (2,):
        raise DimensionMismatch(f"expected a qubit state vector, got shape {psi.shape}")
    r = params.bloch_norm
    if r < 1e-15:
        # Both conditionals equal a0 / 2 and the populations sum to 1.
        return binary_entropy(params.a0 / 2.0)
    direction = (
        params.a_vec[0] * np.array([[0, 1], [1, 0]])
        + params.a_vec[1] * np.array([[0, -1j], [1j, 0]])
        + params.a_vec[2] * np.array([[1, 0], [0, -1]])
    ) / r
    _, vecs = np.linalg.eigh(direction)
    minus, plus = vecs[:, 0], vecs[:, 1]
    total = 0.0
    for vec, sign in ((plus, +1), (minus, -1)):
        population = float(np.abs(np.vdot(vec, psi)) ** 2)
        total += population * binary_entropy(params.conditional_prob_up(sign))
    return total


def quantum_uncertainty(rho, povm: Povm) -> float:
    """Outcome entropy minus device uncertainty: randomness due to the state.

    Equals the full entropy for projective measurements and vanishes when
    every effect is a multiple of the identity.
    """
    return shannon_entropy(outcome_probs(rho, povm)) - device_uncertainty(rho, povm)


def f_white_noise(p: float, alpha: float, d: int) -> float:
    """Per-outcome quantum-uncertainty kernel of a white-noise measurement.

    With alpha_d = (1 - alpha) / d and h(x) = -x log2 x,

        f(p, alpha) = h(alpha p + alpha_d) - p h(alpha + alpha_d) - (1 - p) h(alpha_d)

    so the quantum uncertainty of a white-noise measurement is the sum of
    f over the sharp-basis populations. f is concave in p, vanishes at
    p in {0, 1}, reduces to -p log2 p at alpha = 1 and to 0 at alpha = 0,
    and is nondecreasing in alpha.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must be in [0, 1], got {alpha}")
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    alpha_d = (1.0 - alpha) / d
    return float(
        entropy_term(alpha * p + alpha_d)
        - p * entropy_term(alpha + alpha_d)
        - (1.0 - p) * entropy_term(alpha_d)
    )
