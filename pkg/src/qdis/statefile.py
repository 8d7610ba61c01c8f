"""JSON state files.

Layout::

    {"dim": 4, "basis": ["00", "01", "10", "11"], "label": "...",
     "matrix": [[[re, im], ...4], ...4]}

``basis`` and ``label`` are optional on read; ``basis``, when present, must
match the fixed ordering.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import QdisError
from .linalg import DEFAULT_TOL, TwoQubitState, validate_state

BASIS = ["00", "01", "10", "11"]


class StateFileError(QdisError):
    """Malformed file: wrong JSON, shape, basis or entry format."""


def state_to_json(rho, label: str | None = None) -> str:
    m = np.asarray(rho, dtype=complex)
    doc = {
        "dim": int(m.shape[0]),
        "basis": BASIS,
        "matrix": [[[float(z.real), float(z.imag)] for z in row] for row in m],
    }
    if label is not None:
        doc["label"] = label
    return json.dumps(doc, indent=2) + "\n"


def write_state(path, rho, label: str | None = None) -> None:
    Path(path).write_text(state_to_json(rho, label))


def parse_matrix(doc: dict) -> np.ndarray:
    if not isinstance(doc, dict):
        raise StateFileError("state file must hold a JSON object")
    if doc.get("dim") != 4:
        raise StateFileError(f"expected dim 4, got {doc.get('dim')!r}")
    if "basis" in doc and list(doc["basis"]) != BASIS:
        raise StateFileError(f"basis must be {BASIS}, got {doc['basis']!r}")
    rows = doc.get("matrix")
    try:
        arr = np.array(rows, dtype=float)
    except (TypeError, ValueError) as exc:
        raise StateFileError(f"matrix entries must be [re, im] pairs: {exc}") from None
    if arr.shape != (4, 4, 2):
        raise StateFileError(f"matrix must be 4x4 of [re, im] pairs, got shape {arr.shape}")
    return arr[..., 0] + 1j * arr[..., 1]


def read_matrix(path) -> tuple[np.ndarray, str | None]:
    """Parse a state file without physical validation."""
    try:
        doc = json.loads(Path(path).read_text())
    except OSError as exc:
        raise StateFileError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise StateFileError(f"{path} is not valid JSON: {exc}") from None
    return parse_matrix(doc), doc.get("label")


def read_state(path, tol: float = DEFAULT_TOL) -> TwoQubitState:
    m, _ = read_matrix(path)
    return validate_state(m, tol)
