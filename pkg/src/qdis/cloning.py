"""Reduction factors of optimal universal cloners and the copy numbers that disentangle.

All comparisons use exact rationals: the nonlocal bound lands exactly on the
threshold at six copies.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import InvalidM

THRESHOLD = Fraction(1, 3)


class CloningMode(str, Enum):
    LOCAL_SYMMETRIC = "local_symmetric"  # 1->M cloner on each qubit, T shrinks by eta**2
    LOCAL_SINGLE = "local_single"  # cloner on one qubit only, T shrinks by eta
    NONLOCAL = "nonlocal"  # pair cloned as a whole, T shrinks by eta'


@dataclass(frozen=True)
class Unattainable:
    """No finite copy number works; the net shrink only approaches ``infimum``."""

    infimum: Fraction

    def __str__(self) -> str:
        return f"unattainable (infimum {self.infimum})"


def clone_eta(mode: CloningMode | str, m: int) -> Fraction:
    """Reduction factor of the optimal 1->m universal cloner."""
    mode = CloningMode(mode)
    if int(m) != m or m < 1:
        raise InvalidM(f"copy number must be a positive integer, got {m!r}")
    if mode is CloningMode.NONLOCAL:
        return Fraction(m + 4, 5 * m)
    return Fraction(m + 2, 3 * m)


def net_shrink(mode: CloningMode | str, m: int) -> Fraction:
    mode = CloningMode(mode)
    eta = clone_eta(mode, m)
    return eta * eta if mode is CloningMode.LOCAL_SYMMETRIC else eta


def meets_threshold(mode: CloningMode | str, m: int) -> bool:
    return net_shrink(mode, m) <= THRESHOLD


def _limit(mode: CloningMode) -> Fraction:
    # m -> infinity: (m+2)/(3m) -> 1/3, (m+4)/(5m) -> 1/5
    if mode is CloningMode.NONLOCAL:
        return Fraction(1, 5)
    if mode is CloningMode.LOCAL_SYMMETRIC:
        return Fraction(1, 9)
    return Fraction(1, 3)


def min_copies(mode: CloningMode | str) -> int | Unattainable:
    """Smallest m whose cloner shrinks T to the separability threshold."""
    mode = CloningMode(mode)
    # the net shrink decreases strictly in m towards its limit
    limit = _limit(mode)
    if limit >= THRESHOLD:
        return Unattainable(limit)
    m = 1
    while not meets_threshold(mode, m):
        m += 1
    return m


@dataclass(frozen=True)
class CloningRow:
    mode: CloningMode
    M: int
    eta: Fraction
    net_shrink: Fraction
    meets_threshold: bool

    HEADER = ("mode", "M", "eta", "net_shrink", "meets_threshold")


def cloning_table(max_m: int, modes=tuple(CloningMode)) -> list[CloningRow]:
    if max_m < 1:
        raise InvalidM(f"max_m must be >= 1, got {max_m!r}")
    return [
        CloningRow(mode, m, clone_eta(mode, m), net_shrink(mode, m), meets_threshold(mode, m))
        for mode in modes
        for m in range(1, max_m + 1)
    ]
