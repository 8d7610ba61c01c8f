"""Ideal disentanglement by dephasing qubit B.

A CNOT from B onto a fresh ancilla followed by discarding the ancilla is the
same map as measuring B in a fixed orthonormal basis without reading the
result, ``rho -> sum_k (I x P_k) rho (I x P_k)``. The ancilla is therefore
never built. The output is classical on B and hence separable. Both reduced
states survive only when the basis diagonalizes ``Tr_A rho``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import numpy as np

from .errors import QdisError
from .geometry import profile
from .linalg import I2, TwoQubitState, as_matrix, is_unitary, ptrace, validate_state
from .separability import SeparabilityVerdict, ppt_verdict

IDEAL_TOL = 1e-10
DEGENERACY_TOL = 1e-12
COMPUTATIONAL_BASIS = np.eye(2, dtype=complex)


@dataclass(frozen=True, eq=False)
class ProductTerm:
    weight: float
    state_a: np.ndarray
    state_b: np.ndarray

    def to_dict(self) -> dict:
        return {"weight": self.weight, "state_a": _matrix_json(self.state_a), "state_b": _matrix_json(self.state_b)}


@dataclass(frozen=True, eq=False)
class DisentanglementReport:
    reduced_a_delta: float
    reduced_b_delta: float
    verdict: SeparabilityVerdict
    ic_before: float
    ic_after: float
    product_weights: list[ProductTerm] = field(default_factory=list)

    def is_ideal(self, tol: float = IDEAL_TOL) -> bool:
        return self.reduced_a_delta <= tol and self.reduced_b_delta <= tol and self.verdict.separable

    def to_dict(self, tol: float = IDEAL_TOL) -> dict:
        return {
            "reduced_a_delta": self.reduced_a_delta,
            "reduced_b_delta": self.reduced_b_delta,
            "verdict": self.verdict.to_dict(),
            "ic_before": self.ic_before,
            "ic_after": self.ic_after,
            "ideal": self.is_ideal(tol),
            "product_weights": [t.to_dict() for t in self.product_weights],
        }


@dataclass(frozen=True, eq=False)
class BatchResult:
    reports: list[DisentanglementReport]
    commuting_family: bool
    basis: np.ndarray
    failing_pair: tuple[int, int] | None = None

    def all_ideal(self, tol: float = IDEAL_TOL) -> bool:
        return all(r.is_ideal(tol) for r in self.reports)

    def to_dict(self, tol: float = IDEAL_TOL) -> dict:
        return {
            "commuting_family": self.commuting_family,
            "failing_pair": list(self.failing_pair) if self.failing_pair else None,
            "basis": _matrix_json(self.basis),
            "all_ideal": self.all_ideal(tol),
            "reports": [r.to_dict(tol) for r in self.reports],
        }


def _matrix_json(m: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(m)]


def commuting(a, b, tol: float = IDEAL_TOL) -> bool:
    a, b = as_matrix(a), as_matrix(b)
    return bool(np.max(np.abs(a @ b - b @ a)) <= tol)


def eigenbasis(rho_b, tol: float = DEGENERACY_TOL) -> np.ndarray | None:
    """Eigenvectors of a qubit state as columns, or None when the spectrum is degenerate."""
    w, v = np.linalg.eigh(as_matrix(rho_b))
    if w[1] - w[0] <= tol:
        return None
    return v


def _projectors(basis: np.ndarray) -> np.ndarray:
    return np.einsum("ik,jk->kij", basis, basis.conj())


def dephase(rho, basis) -> np.ndarray:
    rho = as_matrix(rho)
    ops = np.einsum("ab,kcd->kacbd", I2, _projectors(basis)).reshape(2, 4, 4)
    return np.einsum("kab,bc,kcd->ad", ops, rho, ops)


def _product_terms(out: np.ndarray, basis: np.ndarray) -> list[ProductTerm]:
    terms = []
    for proj in _projectors(basis):
        block = np.kron(I2, proj) @ out @ np.kron(I2, proj)
        w = float(np.trace(block).real)
        if w <= DEGENERACY_TOL:
            continue
        terms.append(ProductTerm(w, ptrace(block, 1) / w, proj))
    return terms


def dephase_disentangle(rho, basis=None) -> tuple[TwoQubitState, DisentanglementReport]:
    """Dephase qubit B in ``basis`` (columns) or, by default, in the eigenbasis of ``Tr_A rho``.

    A degenerate ``Tr_A rho`` falls back to the computational basis.
    """
    rho = validate_state(rho)
    m = rho.matrix
    if basis is None:
        basis = eigenbasis(ptrace(m, 2))
        if basis is None:
            basis = COMPUTATIONAL_BASIS
    basis = as_matrix(basis)
    if basis.shape != (2, 2) or not is_unitary(basis):
        raise QdisError("basis must be a 2x2 unitary whose columns are the basis vectors")

    out = validate_state(dephase(m, basis))
    report = DisentanglementReport(
        reduced_a_delta=float(np.max(np.abs(ptrace(out.matrix, 1) - ptrace(m, 1)))),
        reduced_b_delta=float(np.max(np.abs(ptrace(out.matrix, 2) - ptrace(m, 2)))),
        verdict=ppt_verdict(out.matrix),
        ic_before=profile(m).Ic,
        ic_after=profile(out.matrix).Ic,
        product_weights=_product_terms(out.matrix, basis),
    )
    return out, report


def batch_ideal_check(states: Sequence, tol: float = IDEAL_TOL) -> BatchResult:
    """Disentangle a whole family with one basis choice made before seeing which member arrives.

    The basis is the eigenbasis of the first non-degenerate ``Tr_A rho``, or
    the computational basis when every reduced state is maximally mixed.
    """
    if not states:
        raise QdisError("batch_ideal_check needs at least one state")
    mats = [validate_state(s).matrix for s in states]
    reduced = [ptrace(m, 2) for m in mats]

    failing = None
    for i, j in combinations(range(len(reduced)), 2):
        if not commuting(reduced[i], reduced[j], tol):
            failing = (i, j)
            break

    basis = COMPUTATIONAL_BASIS
    for rb in reduced:
        v = eigenbasis(rb)
        if v is not None:
            basis = v
            break

    reports = [dephase_disentangle(m, basis)[1] for m in mats]
    return BatchResult(reports, failing is None, basis, failing)
