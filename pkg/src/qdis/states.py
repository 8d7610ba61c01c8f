"""Named two-qubit state families and seeded random states."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import InvalidSpec
from .linalg import TwoQubitState, tensor_product, validate_state


class Kind(str, Enum):
    BELL = "bell"
    SCHMIDT = "schmidt"
    WERNER = "werner"
    RANDOM_PURE = "random_pure"
    RANDOM_MIXED = "random_mixed"
    RANDOM_PRODUCT = "random_product"


_ALIASES = {
    "pure": Kind.RANDOM_PURE,
    "mixed": Kind.RANDOM_MIXED,
    "product": Kind.RANDOM_PRODUCT,
}

BELL_NAMES = ("phi+", "phi-", "psi+", "psi-")

_BELL_KETS = np.array(
    [
        [1, 0, 0, 1],
        [1, 0, 0, -1],
        [0, 1, 1, 0],
        [0, 1, -1, 0],
    ],
    dtype=complex,
) / np.sqrt(2)
_BELL_KETS.setflags(write=False)


def bell_ket(index: int) -> np.ndarray:
    """Bell vector: 0..3 -> Phi+, Phi-, Psi+, Psi-."""
    return _BELL_KETS[index].copy()


def parse_kind(kind: str | Kind) -> Kind:
    if isinstance(kind, Kind):
        return kind
    key = kind.strip().lower()
    if key in _ALIASES:
        return _ALIASES[key]
    try:
        return Kind(key)
    except ValueError:
        raise InvalidSpec(f"unknown state kind {kind!r}") from None


@dataclass(frozen=True)
class StateSpec:
    """Recipe for one state.

    ``param`` is the Bell index, the Schmidt angle ``theta`` (radians), the
    Werner weight ``p`` or the RNG seed, depending on ``kind``.
    """

    kind: Kind
    param: float | int = 0

    def __post_init__(self):
        object.__setattr__(self, "kind", parse_kind(self.kind))
        k, p = self.kind, self.param
        if k is Kind.BELL:
            if p not in (0, 1, 2, 3):
                raise InvalidSpec(f"bell index must be 0..3, got {p!r}")
            object.__setattr__(self, "param", int(p))
        elif k is Kind.SCHMIDT:
            if not (0.0 <= float(p) <= np.pi / 2):
                raise InvalidSpec(f"schmidt theta must lie in [0, pi/2], got {p!r}")
        elif k is Kind.WERNER:
            if not (0.0 <= float(p) <= 1.0):
                raise InvalidSpec(f"werner p must lie in [0, 1], got {p!r}")
        else:
            if int(p) != p or int(p) < 0:
                raise InvalidSpec(f"seed must be a non-negative integer, got {p!r}")
            object.__setattr__(self, "param", int(p))

    @classmethod
    def parse(cls, text: str) -> "StateSpec":
        """Parse ``kind:param`` text, e.g. ``schmidt:0.5236`` or ``pure:42``."""
        kind, sep, value = text.partition(":")
        if not sep:
            raise InvalidSpec(f"expected 'kind:param', got {text!r}")
        k = parse_kind(kind)
        try:
            param = float(value) if k in (Kind.SCHMIDT, Kind.WERNER) else int(value)
        except ValueError:
            raise InvalidSpec(f"bad parameter {value!r} for {k.value}") from None
        return cls(k, param)

    def __str__(self) -> str:
        return f"{self.kind.value}:{self.param!r}"


def bell(index: int = 0) -> TwoQubitState:
    return make_state(StateSpec(Kind.BELL, index))


def schmidt(theta: float) -> TwoQubitState:
    return make_state(StateSpec(Kind.SCHMIDT, theta))


def werner(p: float) -> TwoQubitState:
    return make_state(StateSpec(Kind.WERNER, p))


def random_pure(seed: int) -> TwoQubitState:
    return make_state(StateSpec(Kind.RANDOM_PURE, seed))


def random_mixed(seed: int) -> TwoQubitState:
    return make_state(StateSpec(Kind.RANDOM_MIXED, seed))


def random_product(seed: int) -> TwoQubitState:
    return make_state(StateSpec(Kind.RANDOM_PRODUCT, seed))


def _ginibre(rng: np.random.Generator, shape) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def _ginibre_state(rng: np.random.Generator, dim: int) -> np.ndarray:
    g = _ginibre(rng, (dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def haar_unitary(rng: np.random.Generator, dim: int = 2) -> np.ndarray:
    """Haar-random unitary via QR of a complex Gaussian matrix."""
    q, r = np.linalg.qr(_ginibre(rng, (dim, dim)))
    d = np.diag(r)
    return q * (d / np.abs(d))


def make_state(spec: StateSpec) -> TwoQubitState:
    k, p = spec.kind, spec.param
    if k is Kind.BELL:
        psi = _BELL_KETS[p]
        return validate_state(np.outer(psi, psi.conj()))
    if k is Kind.SCHMIDT:
        c, s = np.cos(p), np.sin(p)
        rho = np.zeros((4, 4), dtype=complex)
        rho[0, 0], rho[3, 3] = c * c, s * s
        rho[0, 3] = rho[3, 0] = s * c
        return validate_state(rho)
    if k is Kind.WERNER:
        phi = _BELL_KETS[0]
        return validate_state(p * np.outer(phi, phi.conj()) + (1 - p) * np.eye(4) / 4)

    # PCG64 streams are reproducible across platforms for a fixed seed
    rng = np.random.default_rng(p)
    if k is Kind.RANDOM_PURE:
        psi = _ginibre(rng, 4)
        psi /= np.linalg.norm(psi)
        return validate_state(np.outer(psi, psi.conj()))
    if k is Kind.RANDOM_MIXED:
        return validate_state(_ginibre_state(rng, 4))
    a = _ginibre_state(rng, 2)
    b = _ginibre_state(rng, 2)
    return tensor_product(a, b)
