"""Dense linear algebra for small Hermitian operators and quantum states."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    NotHermitian,
    NotNormalized,
    NotOrthonormal,
    NotPositive,
    TraceNotOne,
)

# Double-precision dense eigensolvers on dim <= 8 matrices stay well inside
# these tolerances.
TOL_HERMITIAN = 1e-10
TOL_PSD = 1e-10
TOL_TRACE = 1e-10
TOL_ORTHONORMAL = 1e-8
TOL_RECONSTRUCT = 1e-8


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.flags.writeable = False
    return a


def _as_square_matrix(m) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    return m


def hermiticity_defect(m) -> float:
    """Largest entrywise deviation |m - m^dagger|."""
    m = _as_square_matrix(m)
    return float(np.max(np.abs(m - m.conj().T)))


def require_hermitian(m, tol: float = TOL_HERMITIAN) -> np.ndarray:
    """Return m as a complex array, raising NotHermitian beyond tol."""
    m = _as_square_matrix(m)
    defect = float(np.max(np.abs(m - m.conj().T)))
    if defect > tol:
        raise NotHermitian(f"max |m - m^dagger| entry is {defect:.3e} > {tol:.1e}")
    return m


def require_unit_vector(v, tol: float = TOL_ORTHONORMAL) -> np.ndarray:
    """Return v as a complex 1-D array, raising NotNormalized beyond tol."""
    v = np.asarray(v, dtype=complex)
    if v.ndim != 1:
        raise ValueError(f"expected a vector, got shape {v.shape}")
    norm = float(np.linalg.norm(v))
    if abs(norm - 1.0) > tol:
        raise NotNormalized(f"vector norm is {norm:.12f}, expected 1 within {tol:.1e}")
    return v


def require_orthonormal(basis, tol: float = TOL_ORTHONORMAL) -> np.ndarray:
    """Check that the rows of basis form a complete orthonormal set.

    Returns the basis as a (d, d) complex array whose rows are the vectors.
    """
    basis = np.asarray(basis, dtype=complex)
    if basis.ndim != 2 or basis.shape[0] != basis.shape[1]:
        raise ValueError(f"expected d vectors of length d, got shape {basis.shape}")
    gram = basis.conj() @ basis.T
    defect = float(np.max(np.abs(gram - np.eye(basis.shape[0]))))
    if defect > tol:
        raise NotOrthonormal(f"max Gram-matrix deviation from identity is {defect:.3e} > {tol:.1e}")
    return basis


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenpairs of a Hermitian matrix, sorted by descending eigenvalue.

    ``vectors[k]`` is the unit eigenvector belonging to ``eigenvalues[k]``.
    For a degenerate eigenvalue any orthonormal basis of its eigenspace may
    appear; every downstream quantity built from the decomposition is
    independent of that choice.
    """

    eigenvalues: np.ndarray
    vectors: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "eigenvalues", _frozen(np.asarray(self.eigenvalues, dtype=float)))
        object.__setattr__(self, "vectors", _frozen(np.asarray(self.vectors, dtype=complex)))

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]

    def reconstruct(self) -> np.ndarray:
        """Sum of eigenvalue * |v><v| over all eigenpairs."""
        return np.einsum("k,ki,kj->ij", self.eigenvalues, self.vectors, self.vectors.conj())


def hermitian_eig(m, tol: float = TOL_HERMITIAN) -> SpectralDecomposition:
    """Full eigendecomposition of a Hermitian matrix, eigenvalues descending."""
    m = require_hermitian(m, tol)
    w, v = np.linalg.eigh(m)
    order = np.argsort(w)[::-1]
    return SpectralDecomposition(eigenvalues=w[order], vectors=v[:, order].T)


def operator_norm(m) -> float:
    """Largest singular value; for Hermitian input this is max |eigenvalue|."""
    m = require_hermitian(m)
    return float(np.max(np.abs(np.linalg.eigvalsh(m))))


def overlap(v, w, tol: float = TOL_ORTHONORMAL) -> float:
    """Squared inner product |<v|w>|^2 of two unit vectors, in [0, 1]."""
    v = require_unit_vector(v, tol)
    w = require_unit_vector(w, tol)
    if v.shape != w.shape:
        raise ValueError(f"vector lengths differ: {v.shape[0]} vs {w.shape[0]}")
    return min(float(np.abs(np.vdot(v, w)) ** 2), 1.0)


@dataclass(frozen=True)
class DensityMatrix:
    """Unit-trace positive semidefinite operator wrapping a (d, d) array.

    Construct untrusted input through :func:`validate_density`, which checks
    Hermiticity, positivity and trace before wrapping.
    """

    matrix: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "matrix", _frozen(_as_square_matrix(self.matrix)))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __array__(self, dtype=None, copy=None):
        arr = self.matrix
        if dtype is not None:
            arr = arr.astype(dtype)
        if copy:
            arr = arr.copy()
        return arr


def validate_density(m) -> DensityMatrix:
    """Check Hermiticity, positivity and unit trace, then wrap.

    Raises NotHermitian, NotPositive or TraceNotOne naming the violated
    invariant together with the measured violation.
    """
    m = _as_square_matrix(m)
    defect = float(np.max(np.abs(m - m.conj().T)))
    if defect > TOL_HERMITIAN:
        raise NotHermitian(f"max |m - m^dagger| entry is {defect:.3e} > {TOL_HERMITIAN:.1e}")
    lowest = float(np.min(np.linalg.eigvalsh(m)))
    if lowest < -TOL_PSD:
        raise NotPositive(f"lowest eigenvalue is {lowest:.3e} < -{TOL_PSD:.1e}")
    trace = complex(np.trace(m))
    if abs(trace - 1.0) > TOL_TRACE:
        raise TraceNotOne(f"trace is {trace.real:.12f}, expected 1 within {TOL_TRACE:.1e}")
    return DensityMatrix(m)


def pure_state_density(psi) -> DensityMatrix:
    """|psi><psi| for a unit vector psi."""
    psi = require_unit_vector(psi)
    return DensityMatrix(np.outer(psi, psi.conj()))
