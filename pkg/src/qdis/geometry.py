"""Pauli decomposition and correlation-matrix geometry of two-qubit states.

A state is written as

    rho = 1/4 (I x I + r.sigma x I + I x s.sigma + sum_mn t_mn sigma_m x sigma_n)

and everything here is a function of ``r``, ``s`` and the 3x3 real matrix
``T``. The positive matrix ``sqrt(T T^+)`` is never formed: its eigenvalues are
the singular values of ``T``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.optimize import minimize

from .errors import DomainError, NonRealCoefficient, NonUnitDirection, UnphysicalCoefficients
from .linalg import DEFAULT_TOL, PAULI_BASIS, TwoQubitState, as_matrix, eig_hermitian, validate_state
from .states import bell_ket

# (a, b, i, j) -> (sigma_a x sigma_b)[i, j]
_PAULI_PRODUCTS = np.einsum("aij,bkl->abikjl", PAULI_BASIS, PAULI_BASIS).reshape(4, 4, 4, 4)

_IMAG_DISCARD = 1e-10
_IMAG_ERROR = 1e-8

# Vertices of the tetrahedron of admissible characteristic vectors
TETRAHEDRON_VERTICES = np.array(
    [[-1, -1, -1], [-1, 1, 1], [1, -1, 1], [1, 1, -1]], dtype=float
)


class Region(str, Enum):
    SEPARABILITY_CORRELATION = "separability_correlation"
    INSEPARABILITY_CORRELATION = "inseparability_correlation"


@dataclass(frozen=True, eq=False)
class BlochDecomposition:
    r: np.ndarray
    s: np.ndarray
    T: np.ndarray

    def coefficients(self) -> np.ndarray:
        """4x4 table ``c[a, b] = Tr(rho sigma_a x sigma_b)`` with ``sigma_0 = I``."""
        c = np.empty((4, 4))
        c[0, 0] = 1.0
        c[1:, 0] = self.r
        c[0, 1:] = self.s
        c[1:, 1:] = self.T
        return c

    def to_dict(self) -> dict:
        return {"r": self.r.tolist(), "s": self.s.tolist(), "T": self.T.tolist()}


@dataclass(frozen=True)
class CorrelationProfile:
    m: tuple[float, float, float]
    t_canonical: tuple[float, float, float]
    N: float
    f: float
    Ic: float
    region: Region

    CSV_HEADER = ("sigma1", "sigma2", "sigma3", "t1", "t2", "t3", "N", "f", "Ic", "region")

    def csv_fields(self) -> list:
        return [*self.m, *self.t_canonical, self.N, self.f, self.Ic, self.region.value]

    def to_dict(self) -> dict:
        return {
            "m": list(self.m),
            "t_canonical": list(self.t_canonical),
            "N": self.N,
            "f": self.f,
            "Ic": self.Ic,
            "region": self.region.value,
        }


def pauli_coefficients(rho) -> np.ndarray:
    """Raw complex coefficients ``Tr(rho sigma_a x sigma_b)``; works on stacks."""
    rho = as_matrix(rho)
    return np.einsum("abji,...ij->...ab", _PAULI_PRODUCTS, rho)


def decompose(rho) -> BlochDecomposition:
    c = pauli_coefficients(rho)
    worst = float(np.max(np.abs(c.imag)))
    if worst > _IMAG_ERROR:
        raise NonRealCoefficient(f"imaginary part {worst:.3e} in Pauli coefficients")
    c = c.real
    return BlochDecomposition(r=c[1:, 0].copy(), s=c[0, 1:].copy(), T=c[1:, 1:].copy())


def recompose(d: BlochDecomposition, tol: float = DEFAULT_TOL) -> TwoQubitState:
    c = d.coefficients()
    rho = np.einsum("ab,abij->ij", c, _PAULI_PRODUCTS) / 4
    lo = eig_hermitian(rho, check=False)[0]
    if lo < -tol:
        raise UnphysicalCoefficients(lo)
    return validate_state(rho, tol)


def correlation_value(d: BlochDecomposition, a, b, tol: float = 1e-9) -> float:
    """Correlation ``E(a, b) = a . T b`` along unit directions ``a`` and ``b``."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    for v in (a, b):
        if abs(np.linalg.norm(v) - 1.0) > tol:
            raise NonUnitDirection(f"direction {v} has norm {np.linalg.norm(v)}")
    return float(a @ d.T @ b)


def singular_values(T) -> np.ndarray:
    return np.linalg.svd(np.asarray(T, dtype=float), compute_uv=False)


def characteristic_vector(T) -> np.ndarray:
    """Canonical diagonal of T under local rotations: ``(s1, s2, sign(det T) s3)``."""
    sv = singular_values(T)
    sign = np.sign(np.linalg.det(np.asarray(T, dtype=float)))
    return np.array([sv[0], sv[1], sign * sv[2]])


def tetrahedron_weights(t) -> np.ndarray:
    """Barycentric coordinates of ``t`` w.r.t. :data:`TETRAHEDRON_VERTICES`.

    These coincide with the eigenvalues of the Bell-diagonal state carrying
    ``T = diag(t)``, so all four are non-negative exactly inside.
    """
    t1, t2, t3 = t
    return np.array(
        [
            1 - t1 - t2 - t3,
            1 - t1 + t2 + t3,
            1 + t1 - t2 + t3,
            1 + t1 + t2 - t3,
        ]
    ) / 4


def correlation_trace(rho) -> float:
    """``N(rho)``: trace norm of T, i.e. the trace of ``sqrt(T T^+)``."""
    return float(np.sum(singular_values(decompose(rho).T)))


def inseparability_coefficient(N: float) -> float:
    return N - 1.0 if N > 1.0 else 0.0


def profile(rho) -> CorrelationProfile:
    T = decompose(rho).T
    sv = singular_values(T)
    sign = np.sign(np.linalg.det(T))
    N = float(np.sum(sv))
    return CorrelationProfile(
        m=tuple(float(x) for x in sv),
        t_canonical=(float(sv[0]), float(sv[1]), float(sign * sv[2])),
        N=N,
        f=(1.0 + N) / 4.0,
        Ic=inseparability_coefficient(N),
        region=Region.INSEPARABILITY_CORRELATION if N > 1.0 else Region.SEPARABILITY_CORRELATION,
    )


def _unitary(angles: np.ndarray) -> np.ndarray:
    """Rz(a) Ry(b) Rz(c) for angle triples of shape (..., 3)."""
    a, b, c = np.moveaxis(np.asarray(angles, dtype=float), -1, 0)
    cb, sb = np.cos(b / 2), np.sin(b / 2)
    u = np.empty(a.shape + (2, 2), dtype=complex)
    u[..., 0, 0] = np.exp(-0.5j * (a + c)) * cb
    u[..., 0, 1] = -np.exp(-0.5j * (a - c)) * sb
    u[..., 1, 0] = np.exp(0.5j * (a - c)) * sb
    u[..., 1, 1] = np.exp(0.5j * (a + c)) * cb
    return u


def _overlaps(rho: np.ndarray, angles: np.ndarray) -> np.ndarray:
    # (U x I)|Phi+> reshaped as a 2x2 array is U / sqrt(2)
    e = _unitary(angles).reshape(angles.shape[:-1] + (4,)) / np.sqrt(2)
    return np.einsum("...i,ij,...j->...", e.conj(), rho, e).real


def fef_direct(rho, budget: int = 100_000, grid: int = 20, starts: int = 4) -> float:
    """Fully entangled fraction by direct search over maximally entangled vectors.

    Every maximally entangled two-qubit vector is ``(U x I)|Phi+>`` up to a
    phase, so the search runs over three Euler angles of ``U``: a
    ``grid**3`` scan followed by Nelder-Mead from the best ``starts`` grid
    points, sharing what is left of ``budget`` evaluations. The result is a
    lower bound on the true maximum.
    """
    rho = as_matrix(rho)
    axes = [
        np.linspace(0, 2 * np.pi, grid, endpoint=False),
        np.linspace(0, np.pi, grid),
        np.linspace(0, 2 * np.pi, grid, endpoint=False),
    ]
    pts = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, 3)
    vals = _overlaps(rho, pts)
    best = float(vals.max())

    remaining = max(budget - len(pts), 0)
    if remaining and starts:
        order = np.argsort(vals)[::-1][:starts]
        per_start = max(remaining // len(order), 1)
        for x0 in pts[order]:
            res = minimize(
                lambda x: -_overlaps(rho, x),
                x0,
                method="Nelder-Mead",
                options={"maxfev": per_start, "xatol": 1e-12, "fatol": 1e-15},
            )
            best = max(best, float(-res.fun))
    return best


def bell_auxiliary(rho, tol: float = DEFAULT_TOL) -> TwoQubitState:
    """Bell-diagonal companion state: same T, local Bloch vectors zeroed."""
    d = decompose(rho)
    return recompose(BlochDecomposition(np.zeros(3), np.zeros(3), d.T), tol)


def bell_weights(rho) -> np.ndarray:
    """Populations on Phi+, Phi-, Psi+, Psi-."""
    rho = as_matrix(rho)
    kets = np.stack([bell_ket(k) for k in range(4)])
    return np.einsum("ki,ij,kj->k", kets.conj(), rho, kets).real


def binary_entropy(x: float) -> float:
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return float(-x * np.log2(x) - (1 - x) * np.log2(1 - x))


def bell_diag_eof(f: float) -> float:
    """Entanglement of formation of a Bell-diagonal state from its fully entangled fraction."""
    if not (0.0 <= f <= 1.0):
        raise DomainError(f"fully entangled fraction must lie in [0, 1], got {f!r}")
    if f < 0.5:
        return 0.0
    return binary_entropy(0.5 + np.sqrt(f * (1 - f)))
