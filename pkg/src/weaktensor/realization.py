"""Hypercube-cell realizations of multi-qudit bases, diagonal extraction,
and stabilizer eigenvalue checks.

One physical particle occupying one of ``levels**axes`` grid cells realizes
``axes`` qudits of ``levels`` levels each: the cell index and the basis
label are related by the big-endian base-``levels`` digit map.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import NonQubitShapeError, NonUniformShapeError, OutOfRangeError
from .hilbert import Ket, apply_pauli_string, inner, normalize

#: Component-wise tolerance for declaring an eigenstate.
EIGENSTATE_TOL = 1e-10


def _check_grid(levels: int, axes: int) -> None:
    if levels < 2:
        raise OutOfRangeError(f"levels must be >= 2, got {levels}")
    if axes < 1:
        raise OutOfRangeError(f"axes must be >= 1, got {axes}")


def cell_to_basis(cell: int, levels: int, axes: int) -> tuple[int, ...]:
    """Basis label realized by a grid cell (big-endian base-``levels`` digits)."""
    _check_grid(levels, axes)
    if not 0 <= cell < levels**axes:
        raise OutOfRangeError(f"cell {cell} is outside [0, {levels**axes})")
    digits = []
    for _ in range(axes):
        digits.append(cell % levels)
        cell //= levels
    return tuple(reversed(digits))


def basis_to_cell(label: Sequence[int], levels: int, axes: int) -> int:
    """Inverse of :func:`cell_to_basis`."""
    _check_grid(levels, axes)
    if len(label) != axes:
        raise OutOfRangeError(f"label {tuple(label)} does not have {axes} digits")
    cell = 0
    for digit in label:
        if not 0 <= digit < levels:
            raise OutOfRangeError(f"digit {digit} is outside [0, {levels})")
        cell = cell * levels + digit
    return cell


def diagonal_cells(dims: Sequence[int]) -> list[tuple[int, ...]]:
    """Labels ``(i, i, ..., i)`` of a uniform shape."""
    dims = tuple(dims)
    if len(set(dims)) != 1:
        raise NonUniformShapeError(f"diagonal requires equal dimensions, got {dims}")
    n = len(dims)
    return [(i,) * n for i in range(dims[0])]


def is_diagonal_supported(state: Ket, tol: float = 1e-12) -> bool:
    """True when all amplitude mass outside the diagonal cells is below tol.

    Mass is the sum of squared magnitudes. States with off-diagonal support
    do not necessarily couple their subsystems (they may factorize), which
    is what this predicate screens for.
    """
    if len(set(state.dims)) != 1:
        raise NonUniformShapeError(f"diagonal support requires equal dimensions, got {state.dims}")
    shaped = np.abs(state.amps.reshape(state.dims)) ** 2
    off_mass = float(shaped.sum()) - sum(
        float(shaped[label]) for label in diagonal_cells(state.dims)
    )
    return off_mass < tol


def stabilizer_eigenvalue(state: Ket, letters: str) -> float | None:
    """Eigenvalue of a Pauli string on a state, or None if not an eigenstate.

    Returns ``lam`` when ``apply_pauli_string(letters, state) = lam * state``
    within :data:`EIGENSTATE_TOL` per component of the normalized state.
    Pauli strings are Hermitian, so any returned eigenvalue is real (+1 or
    -1 on real-amplitude states).
    """
    if any(d != 2 for d in state.dims):
        raise NonQubitShapeError(f"stabilizer check requires qubits, got shape {state.dims}")
    unit = normalize(state)
    applied = apply_pauli_string(letters, unit)
    lam = inner(unit, applied)
    residual = float(np.max(np.abs(applied.amps - lam * unit.amps)))
    if residual > EIGENSTATE_TOL:
        return None
    return float(lam.real)
