"""Dense 2x2 / 4x4 operator algebra for qubit and two-qubit states.

Two-qubit matrices use the basis order |00>, |01>, |10>, |11> (qubit 1 is
the left tensor factor). Low-level helpers accept stacks of matrices with
shape ``(..., 4, 4)`` so sweeps can run vectorized through the same code
path as single-state calls.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from .errors import (
    DimensionMismatch,
    NegativeEigenvalue,
    NotHermitian,
    NotPSD,
    QdisError,
    TraceDeviation,
)

DEFAULT_TOL = 1e-9

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)
# index 0 is the identity, 1..3 are sigma_x, sigma_y, sigma_z
PAULI_BASIS = np.stack([I2, SIGMA_X, SIGMA_Y, SIGMA_Z])

for _m in (I2, SIGMA_X, SIGMA_Y, SIGMA_Z, PAULI_BASIS):
    _m.setflags(write=False)

ArrayLike = npt.ArrayLike


@dataclass(frozen=True, eq=False)
class _State:
    matrix: np.ndarray
    tol: float = DEFAULT_TOL

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.matrix
        return self.matrix.astype(dtype)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __repr__(self) -> str:
        return f"{type(self).__name__}({np.array2string(self.matrix, precision=4)})"


class QubitState(_State):
    """Validated 2x2 density matrix."""


class TwoQubitState(_State):
    """Validated 4x4 density matrix."""


def as_matrix(m: ArrayLike) -> np.ndarray:
    return np.asarray(m, dtype=complex)


def _check_square(m: np.ndarray) -> int:
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] not in (2, 4):
        raise DimensionMismatch(f"expected a 2x2 or 4x4 matrix, got shape {m.shape}")
    return m.shape[0]


def hermiticity_defect(m: ArrayLike) -> float:
    m = as_matrix(m)
    return float(np.max(np.abs(m - m.conj().swapaxes(-1, -2))))


def validate_state(m: ArrayLike, tol: float = DEFAULT_TOL) -> QubitState | TwoQubitState:
    """Check hermiticity, unit trace and positivity, in that order.

    Raises the first violated invariant (:class:`NotHermitian`,
    :class:`TraceDeviation` or :class:`NegativeEigenvalue`) with its measured
    deviation attached.
    """
    m = as_matrix(m)
    dim = _check_square(m)
    herm = hermiticity_defect(m)
    if herm > tol:
        raise NotHermitian(herm)
    tr = np.trace(m).real
    if abs(tr - 1.0) > tol:
        raise TraceDeviation(tr - 1.0)
    lo = eig_hermitian(m, check=False)[0]
    if lo < -tol:
        raise NegativeEigenvalue(lo)
    m = m.copy()
    m.setflags(write=False)
    cls = QubitState if dim == 2 else TwoQubitState
    return cls(m, tol)


def tensor_product(a: ArrayLike, b: ArrayLike) -> TwoQubitState:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != (2, 2) or b.shape != (2, 2):
        raise DimensionMismatch("tensor_product expects two 2x2 matrices")
    return validate_state(np.kron(a, b))


def _split(m: np.ndarray) -> np.ndarray:
    return m.reshape(m.shape[:-2] + (2, 2, 2, 2))


def ptrace(m: ArrayLike, keep: int) -> np.ndarray:
    """Raw partial trace over the subsystem not in ``keep``; works on stacks."""
    t = _split(as_matrix(m))
    if keep == 1:
        return np.einsum("...ajbj->...ab", t)
    if keep == 2:
        return np.einsum("...jajb->...ab", t)
    raise ValueError(f"subsystem must be 1 or 2, got {keep!r}")


def ptranspose(m: ArrayLike, subsystem: int = 2) -> np.ndarray:
    """Raw partial transpose; works on stacks."""
    m = as_matrix(m)
    t = _split(m)
    if subsystem == 2:
        t = t.swapaxes(-3, -1)
    elif subsystem == 1:
        t = t.swapaxes(-4, -2)
    else:
        raise ValueError(f"subsystem must be 1 or 2, got {subsystem!r}")
    return t.reshape(m.shape)


def partial_trace(rho: ArrayLike, keep: int) -> QubitState:
    """Reduced state of qubit ``keep`` (1 or 2)."""
    rho = as_matrix(rho)
    if rho.shape != (4, 4):
        raise DimensionMismatch("partial_trace expects a 4x4 matrix")
    return validate_state(ptrace(rho, keep))


def partial_transpose(rho: ArrayLike, subsystem: int = 2) -> np.ndarray:
    rho = as_matrix(rho)
    if rho.shape != (4, 4):
        raise DimensionMismatch("partial_transpose expects a 4x4 matrix")
    return ptranspose(rho, subsystem)


def eig_hermitian(m: ArrayLike, check: bool = True, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Ascending real eigenvalues of a Hermitian matrix (LAPACK ``heevd``)."""
    m = as_matrix(m)
    if check:
        herm = hermiticity_defect(m)
        if herm > tol:
            raise NotHermitian(herm)
    # symmetrize so round-off in the lower triangle does not leak in
    return np.linalg.eigvalsh(0.5 * (m + m.conj().swapaxes(-1, -2)))


def sqrt_psd(m: ArrayLike, tol: float = DEFAULT_TOL) -> np.ndarray:
    m = as_matrix(m)
    herm = hermiticity_defect(m)
    if herm > tol:
        raise NotHermitian(herm)
    w, v = np.linalg.eigh(0.5 * (m + m.conj().T))
    if w[0] < -tol:
        raise NotPSD(w[0])
    w = np.clip(w, 0.0, None)
    return (v * np.sqrt(w)) @ v.conj().T


def fidelity(rho: ArrayLike, sigma: ArrayLike, tol: float = DEFAULT_TOL) -> float:
    """Uhlmann fidelity ``(Tr sqrt(sqrt(sigma) rho sqrt(sigma)))**2``."""
    rho, sigma = as_matrix(rho), as_matrix(sigma)
    if rho.shape != sigma.shape:
        raise DimensionMismatch(f"shapes {rho.shape} and {sigma.shape} differ")
    for s in (rho, sigma):
        validate_state(s, tol)
    root = sqrt_psd(sigma, tol)
    inner = root @ rho @ root
    w = np.clip(eig_hermitian(inner, check=False), 0.0, None)
    f = float(np.sum(np.sqrt(w)) ** 2)
    return min(max(f, 0.0), 1.0)


def is_unitary(u: ArrayLike, tol: float = 1e-10) -> bool:
    u = as_matrix(u)
    return bool(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))) <= tol)


def ket_to_density(psi: ArrayLike) -> TwoQubitState | QubitState:
    psi = np.asarray(psi, dtype=complex).ravel()
    norm = np.linalg.norm(psi)
    if norm == 0:
        raise QdisError("zero vector has no density matrix")
    psi = psi / norm
    return validate_state(np.outer(psi, psi.conj()))
