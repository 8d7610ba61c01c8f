"""Separability decisions for two-qubit states.

For 2x2 systems a positive partial transpose is both necessary and
sufficient, so :func:`ppt_verdict` is an exact test up to ``tol``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .geometry import decompose, singular_values
from .linalg import as_matrix, eig_hermitian, ptrace, ptranspose

PPT_TOL = 1e-10


class Verdict(str, Enum):
    SEPARABLE = "separable"
    ENTANGLED = "entangled"


@dataclass(frozen=True)
class SeparabilityVerdict:
    verdict: Verdict
    min_pt_eigenvalue: float
    negativity_margin: float

    CSV_HEADER = ("verdict", "min_pt_eig")

    @property
    def separable(self) -> bool:
        return self.verdict is Verdict.SEPARABLE

    def csv_fields(self) -> list:
        return [self.verdict.value, self.min_pt_eigenvalue]

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "min_pt_eigenvalue": self.min_pt_eigenvalue,
            "negativity_margin": self.negativity_margin,
        }


def min_pt_eigenvalues(rho) -> np.ndarray:
    """Smallest partial-transpose eigenvalue; accepts stacks of 4x4 matrices."""
    return eig_hermitian(ptranspose(rho, 2), check=False)[..., 0]


def ppt_verdict(rho, tol: float = PPT_TOL) -> SeparabilityVerdict:
    lo = float(min_pt_eigenvalues(as_matrix(rho)))
    if lo < -tol:
        return SeparabilityVerdict(Verdict.ENTANGLED, lo, -lo)
    return SeparabilityVerdict(Verdict.SEPARABLE, lo, 0.0)


def is_product(rho, tol: float = 1e-9) -> bool:
    rho = as_matrix(rho)
    rest = rho - np.kron(ptrace(rho, 1), ptrace(rho, 2))
    return bool(np.max(np.abs(rest)) <= tol)


def det_m(rho) -> float:
    """Determinant of ``sqrt(T T^+)``; zero for every product state."""
    return float(np.prod(singular_values(decompose(rho).T)))
