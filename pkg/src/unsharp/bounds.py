"""Entropic lower bounds for single measurements and measurement pairs.

Single-measurement bounds: the resolution bound (-log2 of the largest effect
norm) and its improvement, the device uncertainty minimized over all states.
Pair bounds: the effect-sandwich bound -log2 C, the largest-overlap bound for
two bases, its white-noise extension B1, the direct-sum majorization bounds
H(W) / Q(W) / B2, the total white-noise device uncertainty, and the minimized
pair device uncertainty with its amplitude-damping closed form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import DimensionMismatch
from .linalg import DensityMatrix, _frozen, require_orthonormal
from .povm import Povm
from .uncertainty import (
    device_uncertainty,
    entropy_term,
    f_white_noise,
    outcome_probs,
    quantum_uncertainty,
    shannon_entropy,
    von_neumann_entropy,
)

# Subset enumeration for the majorization vector costs O(4^d) small
# eigenproblems; desk scale ends well before this guard.
MAX_MAJORIZATION_DIM = 8


def krishna_bound(povm: Povm) -> float:
    """-log2 of the largest effect norm: the best resolution scale.

    Vanishes as soon as any effect has norm 1, even if other effects are
    unsharp, which is why the minimized device uncertainty below is the
    stronger state-independent bound.
    """
    top = max(float(dec.eigenvalues[0]) for dec in povm.spectra)
    return float(-np.log2(top) + 0.0)


def device_uncertainty_operator(povm: Povm) -> np.ndarray:
    """Sum of h(a) |v><v| over all effect eigenpairs, h(a) = -a log2 a.

    The device uncertainty of any state rho equals Tr[rho M] for this
    operator M, so state minimization reduces to its lowest eigenvalue.
    """
    d = povm.dim
    m = np.zeros((d, d), dtype=complex)
    for dec in povm.spectra:
        m += np.einsum("k,ki,kj->ij", entropy_term(dec.eigenvalues), dec.vectors, dec.vectors.conj())
    return (m + m.conj().T) / 2.0


def min_device_uncertainty(povm: Povm) -> float:
    """Device uncertainty minimized over all states (lowest eigenvalue)."""
    return float(np.linalg.eigvalsh(device_uncertainty_operator(povm))[0])


def min_pair_device_bound(a: Povm, b: Povm) -> float:
    """min over states of the summed device uncertainty of two measurements.

    The objective is linear in the state, so the minimum is the lowest
    eigenvalue of the summed device-uncertainty operators and is attained on
    a pure state.
    """
    if a.dim != b.dim:
        raise DimensionMismatch(f"POVM dimensions differ: {a.dim} vs {b.dim}")
    m = device_uncertainty_operator(a) + device_uncertainty_operator(b)
    return float(np.linalg.eigvalsh(m)[0])


def device_uncertainty_white_noise(alpha: float, d: int) -> float:
    """Closed-form device uncertainty of a white-noise measurement.

    With alpha_d = (1 - alpha) / d this is h(alpha + alpha_d) +
    (d - 1) h(alpha_d); it is state-independent and decreases monotonically
    in alpha.
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must be in [0, 1], got {alpha}")
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    alpha_d = (1.0 - alpha) / d
    return float(entropy_term(alpha + alpha_d) + (d - 1) * entropy_term(alpha_d))


def _sandwiched_max(core: Povm, wrap: Povm) -> float:
    best = 0.0
    for effect in core.effects:
        s = np.einsum("nij,jk,nkl->il", wrap.effects, effect, wrap.effects)
        s = (s + s.conj().T) / 2.0
        best = max(best, float(np.max(np.abs(np.linalg.eigvalsh(s)))))
    return best


def coles_bound(a: Povm, b: Povm) -> float:
    """State-independent pair bound -log2 C from sandwiched effect sums.

    C = min( max_i || sum_j B_j A_i B_j ||, max_j || sum_i A_i B_j A_i || ).
    For projective pairs this reduces to the largest-overlap bound of
    ``mu_bound``.
    """
    if a.dim != b.dim:
        raise DimensionMismatch(f"POVM dimensions differ: {a.dim} vs {b.dim}")
    c = min(_sandwiched_max(a, b), _sandwiched_max(b, a))
    return float(-np.log2(min(c, 1.0)) + 0.0)


def mu_bound(basis_a, basis_b) -> float:
    """Largest-overlap bound -log2 max_{i,j} |<a_i|b_j>|^2 for two bases."""
    basis_a = require_orthonormal(basis_a)
    basis_b = require_orthonormal(basis_b)
    if basis_a.shape != basis_b.shape:
        raise DimensionMismatch(f"basis dimensions differ: {basis_a.shape[0]} vs {basis_b.shape[0]}")
    c = float(np.max(np.abs(basis_a.conj() @ basis_b.T) ** 2))
    return float(-np.log2(min(c, 1.0)) + 0.0)


def b1_bound(basis_a, alpha: float, basis_b, beta: float) -> float:
    """Largest-overlap bound plus the smaller white-noise device uncertainty.

    Convention: the overlap constant is max_{i,j} |<a_i|b_j>|^2, so the sharp
    limit alpha = beta = 1 recovers ``mu_bound`` exactly.
    """
    mu = mu_bound(basis_a, basis_b)
    d = np.asarray(basis_a).shape[0]
    return mu + min(
        device_uncertainty_white_noise(alpha, d),
        device_uncertainty_white_noise(beta, d),
    )


def berta_reduced_bound(basis_a, basis_b, rho) -> float:
    """Largest-overlap bound plus the von Neumann entropy of the state.

    Single-system reduction of the memory-assisted entropic bound; used as a
    numeric cross-check for the white-noise bound chain.
    """
    return mu_bound(basis_a, basis_b) + von_neumann_entropy(rho)


@dataclass(frozen=True)
class MajorizationVector:
    """Subset-maximized norms w and their increment distribution W.

    ``w[k-1]`` is the largest operator norm of a sum of k+1 projectors drawn
    from the two bases (any split between them); it grows from at least 1 to
    exactly 2. ``W = (w_1 - 1, w_2 - w_1, ..., w_d - w_{d-1}, 0, ..., 0)`` has
    length 2d - 1, entries >= 0, and sums to 1, so that prepending a 1 yields
    a comparison vector of the same length 2d as a pair of outcome
    distributions.
    """

    w: np.ndarray
    W: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "w", _frozen(np.asarray(self.w, dtype=float)))
        object.__setattr__(self, "W", _frozen(np.asarray(self.W, dtype=float)))

    @property
    def dim(self) -> int:
        return self.w.shape[0]

    def padded(self) -> np.ndarray:
        """W zero-padded to length 2d."""
        return np.concatenate([self.W, [0.0]])


def majorization_vector(basis_a, basis_b) -> MajorizationVector:
    """Exhaustive subset enumeration of the majorization coefficients.

    For k = 1..d, w_k maximizes || sum_{i in R} |a_i><a_i| + sum_{j in S}
    |b_j><b_j| || over all index subsets with |R| + |S| = k + 1. Empty
    subsets are allowed; they are never optimal but belong to the
    definition.
    """
    basis_a = require_orthonormal(basis_a)
    basis_b = require_orthonormal(basis_b)
    if basis_a.shape != basis_b.shape:
        raise DimensionMismatch(f"basis dimensions differ: {basis_a.shape[0]} vs {basis_b.shape[0]}")
    d = basis_a.shape[0]
    if d > MAX_MAJORIZATION_DIM:
        raise ValueError(f"subset enumeration is limited to d <= {MAX_MAJORIZATION_DIM}, got d={d}")

    proj_a = np.einsum("ni,nj->nij", basis_a, basis_a.conj())
    proj_b = np.einsum("ni,nj->nij", basis_b, basis_b.conj())
    sums_a = {(): np.zeros((d, d), dtype=complex)}
    sums_b = {(): np.zeros((d, d), dtype=complex)}
    for size in range(1, d + 1):
        for subset in combinations(range(d), size):
            sums_a[subset] = sums_a[subset[:-1]] + proj_a[subset[-1]]
            sums_b[subset] = sums_b[subset[:-1]] + proj_b[subset[-1]]

    w = np.empty(d)
    for k in range(1, d + 1):
        best = 0.0
        for r_size in range(max(0, k + 1 - d), min(d, k + 1) + 1):
            s_size = k + 1 - r_size
            for r_set in combinations(range(d), r_size):
                pa = sums_a[r_set]
                for s_set in combinations(range(d), s_size):
                    top = float(np.linalg.eigvalsh(pa + sums_b[s_set])[-1])
                    if top > best:
                        best = top
        w[k - 1] = best

    increments = np.diff(w, prepend=1.0)
    big_w = np.concatenate([np.clip(increments, 0.0, None), np.zeros(d - 1)])
    return MajorizationVector(w=w, W=big_w)


def hw_bound(mv: MajorizationVector) -> float:
    """Shannon entropy of the majorization increment distribution W."""
    return shannon_entropy(mv.W)


def qw_b2_bound(basis_a, alpha: float, basis_b, beta: float) -> tuple[float, float]:
    """Majorization bound on the quantum uncertainty and the full bound B2.

    Q(W) applies the white-noise kernel at the larger noise level,
    min(alpha, beta), to W zero-padded to length 2d. B2 adds both closed-form
    device uncertainties; it equals H(W) exactly when alpha = beta = 1 and
    collapses to the summed device uncertainty when min(alpha, beta) = 0.
    """
    mv = majorization_vector(basis_a, basis_b)
    d = mv.dim
    noisier = min(alpha, beta)
    qw = float(sum(f_white_noise(x, noisier, d) for x in mv.padded()))
    b2 = qw + device_uncertainty_white_noise(alpha, d) + device_uncertainty_white_noise(beta, d)
    return qw, b2


def ad_coles_closed_form(e: float) -> float:
    """Closed form of -log2 C for the damping pair on the d=3 Fourier pair.

    Valid for equal transition probabilities on both measurements. The value
    is log2(3) at e = 0 and 0 at e = 1.
    """
    if not 0.0 <= e <= 1.0:
        raise ValueError(f"transition probability e must be in [0, 1], got {e}")
    inner = (
        2.0 + 2.0 * e - e**2 + 3.0 * e**3 + (1.0 - e) * e * np.sqrt(3.0 * (4.0 + 4.0 * e + 3.0 * e**2))
    ) / 6.0
    return float(-np.log2(inner) + 0.0)


_B1_NOTE = (
    "B1 convention: the overlap constant is max_{i,j} |<a_i|b_j>|^2 and "
    "B1 = -log2(overlap constant) + min(D_WN(alpha), D_WN(beta))."
)


@dataclass(frozen=True)
class BoundReport:
    """Named bound values for one scenario, plus metadata and notes."""

    values: dict[str, float]
    metadata: dict[str, object] = field(default_factory=dict)
    notes: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {"values": dict(self.values), "metadata": dict(self.metadata), "notes": list(self.notes)}


def _pvm_basis(povm: Povm) -> np.ndarray | None:
    """Rows of effect top-eigenvectors if the POVM is rank-1 projective."""
    if povm.n_outcomes != povm.dim:
        return None
    vectors = []
    for dec in povm.spectra:
        if abs(dec.eigenvalues[0] - 1.0) > 1e-9 or (povm.dim > 1 and dec.eigenvalues[1] > 1e-9):
            return None
        vectors.append(dec.vectors[0])
    return np.asarray(vectors)


def pair_bound_report(a: Povm, b: Povm, rho: DensityMatrix | None = None) -> BoundReport:
    """All applicable bounds for a measurement pair, optionally with a state.

    POVM-level bounds are always included. The basis-family bounds (mu, B1,
    HW, QW, B2, D_WN) are included only when both POVMs are projective, in
    which case they are evaluated at zero noise. With a state, the outcome
    entropies and the device/quantum split are added for both measurements.
    """
    if a.dim != b.dim:
        raise DimensionMismatch(f"POVM dimensions differ: {a.dim} vs {b.dim}")
    values = {
        "krishna_A": krishna_bound(a),
        "krishna_B": krishna_bound(b),
        "minD_A": min_device_uncertainty(a),
        "minD_B": min_device_uncertainty(b),
        "minD_pair": min_pair_device_bound(a, b),
        "coles_C": coles_bound(a, b),
    }
    metadata: dict[str, object] = {"dim": a.dim, "n_A": a.n_outcomes, "n_B": b.n_outcomes}
    notes = []

    basis_a, basis_b = _pvm_basis(a), _pvm_basis(b)
    if basis_a is not None and basis_b is not None:
        mv = majorization_vector(basis_a, basis_b)
        qw, b2 = qw_b2_bound(basis_a, 1.0, basis_b, 1.0)
        values.update(
            mu=mu_bound(basis_a, basis_b),
            B1=b1_bound(basis_a, 1.0, basis_b, 1.0),
            HW=hw_bound(mv),
            QW=qw,
            B2=b2,
            D_WN=0.0,
        )
        metadata["pvm_pair"] = True
        notes.append(_B1_NOTE)
        notes.append("basis-family bounds evaluated at zero noise (both POVMs are projective)")
    else:
        metadata["pvm_pair"] = False

    if rho is not None:
        values.update(
            H_A=shannon_entropy(outcome_probs(rho, a)),
            H_B=shannon_entropy(outcome_probs(rho, b)),
            D_A=device_uncertainty(rho, a),
            D_B=device_uncertainty(rho, b),
            Q_A=quantum_uncertainty(rho, a),
            Q_B=quantum_uncertainty(rho, b),
        )
        metadata["state"] = True
    return BoundReport(values=values, metadata=metadata, notes=tuple(notes))
