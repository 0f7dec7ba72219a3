"""Dense complex-Hermitian kernel for the 2x2 and 4x4 matrices used everywhere else.

All tolerances are absolute; density-matrix entries are O(1) by unit trace.
The shared basis ordering is |00>, |01>, |10>, |11> with the first qubit as
subsystem 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ContractViolation, DimensionError, NotPSDError, NumericFailure

HERMITICITY_TOL = 1e-10
PSD_FLOOR = -1e-10


def _as_matrix(m, dims=(2, 4)) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] not in dims:
        raise DimensionError(f"expected a square matrix with dim in {dims}, got shape {a.shape}")
    return a


def hermitian_defect(m) -> float:
    """max |M[i,j] - conj(M[j,i])| over all entries."""
    a = np.asarray(m, dtype=complex)
    return float(np.max(np.abs(a - a.conj().T)))


def hermitianize(m) -> np.ndarray:
    return (np.asarray(m, dtype=complex) + np.asarray(m, dtype=complex).conj().T) / 2


@dataclass(frozen=True)
class HermitianEigenSystem:
    """Eigenvalues in descending order with orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def kron(a, b) -> np.ndarray:
    """Kronecker product of two 2x2 matrices in the |mk> = |m> x |k> ordering."""
    a = _as_matrix(a, dims=(2,))
    b = _as_matrix(b, dims=(2,))
    return np.kron(a, b)


def eig_hermitian(m) -> HermitianEigenSystem:
    """Eigendecomposition of a Hermitian matrix, eigenvalues descending.

    The input is symmetrized as (M + M^dag)/2 before factorization; inputs
    that are non-Hermitian beyond 1e-10 are rejected.
    """
    a = _as_matrix(m)
    if hermitian_defect(a) > HERMITICITY_TOL:
        raise ContractViolation(
            f"matrix is not Hermitian within {HERMITICITY_TOL:g} "
            f"(defect {hermitian_defect(a):.3e})"
        )
    try:
        w, v = np.linalg.eigh(hermitianize(a))
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK rarely fails at dim <= 4
        raise NumericFailure(f"eigensolver did not converge: {exc}") from exc
    order = np.argsort(w)[::-1]
    return HermitianEigenSystem(eigenvalues=w[order], eigenvectors=v[:, order])


def sqrt_psd(m) -> np.ndarray:
    """Hermitian PSD square root S with S @ S == m.

    Eigenvalues in [-1e-10, 0) are treated as Monte Carlo rounding and
    clipped to zero; anything below the floor raises NotPSDError.
    """
    es = eig_hermitian(m)
    w = es.eigenvalues
    if w.min() < PSD_FLOOR:
        raise NotPSDError(f"eigenvalue {w.min():.3e} below floor {PSD_FLOOR:g}")
    w = np.sqrt(np.clip(w, 0.0, None))
    v = es.eigenvectors
    return hermitianize((v * w) @ v.conj().T)


def _check_density(rho: np.ndarray) -> None:
    if abs(np.trace(rho).real - 1.0) > 1e-12 or abs(np.trace(rho).imag) > 1e-12:
        raise ContractViolation(f"trace {np.trace(rho):.15g} != 1")
    if hermitian_defect(rho) > HERMITICITY_TOL:
        raise ContractViolation("density matrix is not Hermitian")
    w = np.linalg.eigvalsh(hermitianize(rho))
    if w.min() < PSD_FLOOR:
        raise ContractViolation(f"density matrix has eigenvalue {w.min():.3e} below {PSD_FLOOR:g}")


def partial_trace(rho, keep: int) -> np.ndarray:
    """Reduced 2x2 state of subsystem `keep` (1 or 2) of a 4x4 density matrix.

    For keep=1 the coefficient mapping is A[m,m'] = Psi[m,m',0,0] + Psi[m,m',1,1],
    i.e. A00 = Psi_0000 + Psi_0011 in the shared basis ordering.
    """
    a = _as_matrix(rho, dims=(4,))
    _check_density(a)
    if keep not in (1, 2):
        raise DimensionError(f"keep must be 1 or 2, got {keep!r}")
    r4 = a.reshape(2, 2, 2, 2)  # [m, k, m', k']
    if keep == 1:
        return np.einsum("mknk->mn", r4)
    return np.einsum("mkml->kl", r4)


def purity(m) -> float:
    """Tr{rho^2} of a valid density matrix."""
    a = _as_matrix(m)
    _check_density(a)
    return float(np.trace(a @ a).real)
