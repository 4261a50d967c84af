"""POVM construction and validation, including noise-model families.

A POVM is an ordered list of positive effects summing to identity. Outcome
labels are list indices; effect order is significant and preserved. Effects
that are exactly zero (produced by extreme noise parameters) are retained:
they carry outcome probability 0 and contribute nothing to any entropy.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    CompletenessViolated,
    DimensionMismatch,
    EigenvalueAboveOne,
    NotPositive,
)
from .linalg import (
    TOL_PSD,
    TOL_RECONSTRUCT,
    SpectralDecomposition,
    _frozen,
    hermitian_eig,
    require_orthonormal,
)

PAULI_X = _frozen(np.array([[0, 1], [1, 0]], dtype=complex))
PAULI_Y = _frozen(np.array([[0, -1j], [1j, 0]], dtype=complex))
PAULI_Z = _frozen(np.array([[1, 0], [0, -1]], dtype=complex))


@dataclass(frozen=True)
class Povm:
    """Validated POVM with cached spectral decompositions of every effect.

    ``effects`` is a read-only (n, d, d) complex array. ``spectra[i]``
    decomposes ``effects[i]``, with eigenvalues clamped into [0, 1] after the
    positivity check (entropy weights are undefined off that interval).
    """

    effects: np.ndarray
    spectra: tuple[SpectralDecomposition, ...] = field(init=False, repr=False)

    def __post_init__(self):
        effects = np.asarray(self.effects, dtype=complex)
        if effects.ndim != 3 or effects.shape[1] != effects.shape[2]:
            raise ValueError(f"expected an (n, d, d) effect array, got shape {effects.shape}")
        if effects.shape[0] == 0:
            raise ValueError("a POVM needs at least one effect")
        d = effects.shape[1]
        spectra = []
        for i, effect in enumerate(effects):
            dec = hermitian_eig(effect)
            low = float(dec.eigenvalues[-1])
            high = float(dec.eigenvalues[0])
            if low < -TOL_PSD:
                raise NotPositive(f"effect {i}: lowest eigenvalue {low:.3e} < -{TOL_PSD:.1e}")
            if high > 1.0 + TOL_PSD:
                raise EigenvalueAboveOne(f"effect {i}: largest eigenvalue {high:.12f} > 1")
            spectra.append(SpectralDecomposition(np.clip(dec.eigenvalues, 0.0, 1.0), dec.vectors))
        residual = float(np.max(np.abs(effects.sum(axis=0) - np.eye(d))))
        if residual > TOL_RECONSTRUCT:
            raise CompletenessViolated(
                f"effects sum to identity with max residual {residual:.3e} > {TOL_RECONSTRUCT:.1e}"
            )
        object.__setattr__(self, "effects", _frozen(effects))
        object.__setattr__(self, "spectra", tuple(spectra))

    @property
    def dim(self) -> int:
        return self.effects.shape[1]

    @property
    def n_outcomes(self) -> int:
        return self.effects.shape[0]

    def completeness_residual(self) -> float:
        """Max entrywise deviation of the effect sum from identity."""
        return float(np.max(np.abs(self.effects.sum(axis=0) - np.eye(self.dim))))


def make_povm(effects) -> Povm:
    """Validate a sequence of effect matrices and cache their spectra."""
    return Povm(np.stack([np.asarray(e, dtype=complex) for e in effects]))


def projective_from_basis(basis) -> Povm:
    """Rank-1 projector POVM |a_i><a_i| in basis order (a sharp measurement)."""
    basis = require_orthonormal(basis)
    return Povm(np.einsum("ni,nj->nij", basis, basis.conj()))


@dataclass(frozen=True)
class QubitPovmParams:
    """Bloch parameterization of a two-outcome qubit measurement.

    The "up" effect is (a0 * I + a_vec . sigma) / 2 and the "down" effect is
    its complement. Positivity of both requires |a_vec| <= a0 <= 2 - |a_vec|.
    """

    a0: float
    a_vec: np.ndarray

    def __post_init__(self):
        a_vec = np.asarray(self.a_vec, dtype=float)
        if a_vec.shape != (3,):
            raise ValueError(f"a_vec must be a 3-vector, got shape {a_vec.shape}")
        object.__setattr__(self, "a_vec", _frozen(a_vec))
        r = self.bloch_norm
        if not (r - 1e-12 <= self.a0 <= 2.0 - r + 1e-12):
            raise ValueError(
                f"need |a_vec| <= a0 <= 2 - |a_vec|, got a0={self.a0}, |a_vec|={r}"
            )

    @property
    def bloch_norm(self) -> float:
        return float(np.linalg.norm(self.a_vec))

    def conditional_prob_up(self, sign: int) -> float:
        """p(up | +-): probability of outcome "up" on the +-|a_vec| eigenstate."""
        return (self.a0 + sign * self.bloch_norm) / 2.0


def qubit_povm(params: QubitPovmParams) -> Povm:
    """Two-outcome qubit POVM from Bloch parameters.

    The effect eigenvectors are the eigenstates of a_vec . sigma and the
    eigenvalues are the conditional outcome probabilities (a0 +- |a_vec|) / 2
    and their complements.
    """
    a0, a_vec = params.a0, params.a_vec
    up = (a0 * np.eye(2) + a_vec[0] * PAULI_X + a_vec[1] * PAULI_Y + a_vec[2] * PAULI_Z) / 2.0
    return Povm(np.stack([up, np.eye(2) - up]))


def white_noise_povm(basis, alpha: float) -> Povm:
    """Sharp basis measurement mixed with white noise.

    Each effect is alpha |a_i><a_i| + (1 - alpha) I / d, so its spectrum is
    alpha + (1 - alpha) / d once and (1 - alpha) / d with multiplicity d - 1.

    Parameters
    ----------
    basis : (d, d) array
        Rows are the orthonormal measurement directions.
    alpha : float
        Mixedness parameter in [0, 1]; 1 is sharp, 0 is pure noise.
    """
    basis = require_orthonormal(basis)
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must be in [0, 1], got {alpha}")
    d = basis.shape[0]
    projectors = np.einsum("ni,nj->nij", basis, basis.conj())
    return Povm(alpha * projectors + (1.0 - alpha) * np.eye(d) / d)


def amplitude_damping_povm(basis, e: float) -> Povm:
    """Three-outcome measurement with amplitude-damping noise on a d=3 basis.

    Population leaks from the two excited outcomes into the ground outcome
    with transition probability e:

        E_0 = |x_0><x_0| + e |x_1><x_1| + e |x_2><x_2|
        E_1 = (1 - e) |x_1><x_1|
        E_2 = (1 - e) |x_2><x_2|

    Completeness holds exactly for every e in [0, 1].
    """
    basis = require_orthonormal(basis)
    if basis.shape[0] != 3:
        raise DimensionMismatch(f"amplitude damping model needs a d=3 basis, got d={basis.shape[0]}")
    if not 0.0 <= e <= 1.0:
        raise ValueError(f"transition probability e must be in [0, 1], got {e}")
    p = np.einsum("ni,nj->nij", basis, basis.conj())
    return Povm(np.stack([p[0] + e * p[1] + e * p[2], (1.0 - e) * p[1], (1.0 - e) * p[2]]))


def convex_combination(a: Povm, b: Povm, p: float) -> Povm:
    """Coin-flip mixture of two POVMs: effects {p A_1..A_n, (1-p) B_1..B_m}."""
    if a.dim != b.dim:
        raise DimensionMismatch(f"POVM dimensions differ: {a.dim} vs {b.dim}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"mixing probability must be in [0, 1], got {p}")
    return Povm(np.concatenate([p * a.effects, (1.0 - p) * b.effects]))


def mub_fourier_basis(dim: int) -> tuple[np.ndarray, np.ndarray]:
    """Computational basis and its discrete Fourier transform.

    The pair is mutually unbiased: every cross overlap |<x_i|z_j>|^2 is 1/d.
    """
    if dim < 2:
        raise ValueError(f"need dim >= 2, got {dim}")
    j, k = np.meshgrid(np.arange(dim), np.arange(dim), indexing="ij")
    fourier = np.exp(2j * np.pi * j * k / dim) / np.sqrt(dim)
    return np.eye(dim, dtype=complex), fourier
