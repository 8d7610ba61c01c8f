"""Local qubit channels in operator-sum form and the isotropic threshold.

The isotropic (depolarizing) channel with reduction factor ``eta`` shrinks
every Bloch vector by ``eta``. Applied on both sides it scales the local
Bloch vectors by ``eta1`` and ``eta2`` and the correlation matrix by
``eta1 * eta2``; every Schmidt-form pure state ends up separable exactly when
``eta1 * eta2 <= 1/3``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import EtaOutOfRange, IncompleteKrausSet, InvalidProbabilities
from .linalg import I2, PAULIS, DEFAULT_TOL, QubitState, TwoQubitState, as_matrix, validate_state
from .separability import min_pt_eigenvalues, PPT_TOL

COMPLETENESS_TOL = 1e-10
THRESHOLD = 1.0 / 3.0
ETA_MIN = -1.0 / 3.0
# sweep rows this close to the threshold are not counted as disagreements
SWEEP_BAND = 1e-3


@dataclass(frozen=True, eq=False)
class KrausSet:
    operators: tuple[np.ndarray, ...]
    completeness_defect: float

    def __len__(self) -> int:
        return len(self.operators)

    def stacked(self) -> np.ndarray:
        return np.stack(self.operators)


def kraus_set(operators: Sequence) -> KrausSet:
    ops = tuple(as_matrix(k) for k in operators)
    if not ops:
        raise IncompleteKrausSet("a Kraus set needs at least one operator")
    if any(k.shape != (2, 2) for k in ops):
        raise IncompleteKrausSet("Kraus operators must be 2x2")
    total = sum(k.conj().T @ k for k in ops)
    defect = float(np.max(np.abs(total - I2)))
    return KrausSet(ops, defect)


IDENTITY = kraus_set([I2])


@dataclass(frozen=True)
class IsotropicChannel:
    eta: float

    def __post_init__(self):
        if not (ETA_MIN <= self.eta <= 1.0):
            raise EtaOutOfRange(
                f"reduction factor {self.eta!r} outside [-1/3, 1]; the map is not completely positive"
            )

    def kraus(self) -> KrausSet:
        return isotropic_kraus(self.eta)


@dataclass(frozen=True)
class PauliMixture:
    """Random Pauli channel ``rho -> sum_k p_k sigma_k rho sigma_k``.

    Always unital, so its Bloch map has no shift; the linear part is
    :attr:`bloch_matrix`.
    """

    p0: float
    p1: float
    p2: float
    p3: float

    def __post_init__(self):
        p = self.probabilities
        if np.any(p < 0) or abs(p.sum() - 1.0) > 1e-12:
            raise InvalidProbabilities(f"Pauli weights {p.tolist()} are not a distribution")

    @property
    def probabilities(self) -> np.ndarray:
        return np.array([self.p0, self.p1, self.p2, self.p3], dtype=float)

    @property
    def bloch_matrix(self) -> np.ndarray:
        p0, p1, p2, p3 = self.probabilities
        return np.diag([p0 + p1 - p2 - p3, p0 - p1 + p2 - p3, p0 - p1 - p2 + p3])


def isotropic_kraus(eta: float) -> KrausSet:
    IsotropicChannel(eta)
    a = np.sqrt((1 + 3 * eta) / 4)
    b = np.sqrt((1 - eta) / 4)
    return kraus_set([a * I2] + [b * p for p in PAULIS])


def pauli_mixture_kraus(p: PauliMixture) -> KrausSet:
    w = np.sqrt(p.probabilities)
    return kraus_set([w[0] * I2] + [wk * s for wk, s in zip(w[1:], PAULIS)])


def _require_complete(*sets: KrausSet) -> None:
    for k in sets:
        if k.completeness_defect > COMPLETENESS_TOL:
            raise IncompleteKrausSet(f"sum K^+K deviates from I by {k.completeness_defect:.3e}")


def apply_channel(k: KrausSet, rho, tol: float = DEFAULT_TOL) -> QubitState:
    _require_complete(k)
    rho = as_matrix(rho)
    ops = k.stacked()
    out = np.einsum("kab,bc,kdc->ad", ops, rho, ops.conj())
    return validate_state(out, tol)


def local_operators(kA: KrausSet, kB: KrausSet) -> np.ndarray:
    """All products ``A_i x B_j`` as a ``(len(kA) * len(kB), 4, 4)`` stack."""
    return np.einsum("iab,jcd->ijacbd", kA.stacked(), kB.stacked()).reshape(-1, 4, 4)


def apply_local_many(rhos, kA: KrausSet, kB: KrausSet) -> np.ndarray:
    """Unvalidated two-sided channel on a stack ``(..., 4, 4)`` of states."""
    _require_complete(kA, kB)
    ops = local_operators(kA, kB)
    return np.einsum("kab,...bc,kdc->...ad", ops, as_matrix(rhos), ops.conj())


def apply_local(rho, kA: KrausSet, kB: KrausSet, tol: float = DEFAULT_TOL) -> TwoQubitState:
    return validate_state(apply_local_many(rho, kA, kB), tol)


def apply_isotropic(rho, eta1: float, eta2: float) -> TwoQubitState:
    return apply_local(rho, isotropic_kraus(eta1), isotropic_kraus(eta2))


def quality_factor(eta1: float, eta2: float) -> float:
    return (eta1 + eta2) / 2


def threshold_ok(eta1: float, eta2: float) -> bool:
    return bool(eta1 * eta2 <= THRESHOLD + 1e-12)


def analytic_ppt_margin(theta, eta1: float, eta2: float):
    """Determinant (times 16) of the only block of the partial transpose that can go negative.

    Evaluated for ``cos(theta)|00> + sin(theta)|11>`` after isotropic channels
    ``eta1`` and ``eta2``; a negative value means the output is entangled.
    Vectorizes over ``theta``.
    """
    s = np.cos(2 * np.asarray(theta))
    t = np.sin(2 * np.asarray(theta))
    e = eta1 * eta2
    d = (eta1 - eta2) * s
    return (1 - e + d) * (1 - e - d) - 4 * e * e * t * t


def theta_grid(steps: int) -> np.ndarray:
    if steps < 2:
        raise ValueError("need at least two theta points")
    return np.linspace(0.0, np.pi / 2, steps)


def worst_case_margin(eta1: float, eta2: float, theta_steps: int = 181) -> float:
    return float(np.min(analytic_ppt_margin(theta_grid(theta_steps), eta1, eta2)))


def schmidt_stack(thetas) -> np.ndarray:
    """Density matrices of ``cos t|00> + sin t|11>`` for every ``t`` in ``thetas``."""
    thetas = np.asarray(thetas, dtype=float)
    c, s = np.cos(thetas), np.sin(thetas)
    out = np.zeros(thetas.shape + (4, 4), dtype=complex)
    out[..., 0, 0] = c * c
    out[..., 3, 3] = s * s
    out[..., 0, 3] = out[..., 3, 0] = c * s
    return out


@dataclass(frozen=True)
class SweepRow:
    eta1: float
    eta2: float
    product: float
    worst_margin: float
    ppt_all_theta: bool
    threshold_predict: bool

    HEADER = ("eta1", "eta2", "product", "worst_margin", "ppt_all_theta", "threshold_predict", "agree")

    @property
    def agree(self) -> bool:
        return self.ppt_all_theta == self.threshold_predict

    @property
    def near_boundary(self) -> bool:
        return abs(self.product - THRESHOLD) < SWEEP_BAND


def sweep_point(eta1: float, eta2: float, thetas: np.ndarray, tol: float = PPT_TOL) -> SweepRow:
    outs = apply_local_many(schmidt_stack(thetas), isotropic_kraus(eta1), isotropic_kraus(eta2))
    lows = min_pt_eigenvalues(outs)
    return SweepRow(
        eta1=float(eta1),
        eta2=float(eta2),
        product=float(eta1 * eta2),
        worst_margin=float(np.min(analytic_ppt_margin(thetas, eta1, eta2))),
        ppt_all_theta=bool(np.all(lows >= -tol)),
        threshold_predict=threshold_ok(eta1, eta2),
    )


def threshold_sweep(eta_steps: int = 50, theta_steps: int = 91, eta_range=(0.0, 1.0)) -> list[SweepRow]:
    """Numerical PPT check of the isotropic threshold on an ``eta1 x eta2`` grid.

    Rows come out ordered by ``eta1`` then ``eta2``.
    """
    if eta_steps < 2:
        raise ValueError("need at least two eta points")
    etas = np.linspace(eta_range[0], eta_range[1], eta_steps)
    thetas = theta_grid(theta_steps)
    return [sweep_point(e1, e2, thetas) for e1 in etas for e2 in etas]


def count_disagreements(rows: Sequence[SweepRow]) -> int:
    return sum(1 for row in rows if not row.agree and not row.near_boundary)
