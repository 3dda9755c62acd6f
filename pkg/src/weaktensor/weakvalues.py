"""Weak values, weak-value tensors, expectation tensors, and marginal sums.

The central object is the tensor of weak values of full projector products:
component ``(i_1, ..., i_N)`` is ``<post| P_{i_1} ... P_{i_N} |pre> /
<post|pre>`` with one basis projector per subsystem. Because the products
resolve the identity, the components always sum to 1; summing over all axes
but one yields the single-subsystem projector weak values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from .errors import (
    OrthogonalSelectionError,
    ShapeMismatchError,
    SubsystemOutOfRangeError,
)
from .hilbert import Ket, ProjectorProduct, apply_projector_product, inner, norm, normalize

#: Relative orthogonality tolerance: a selection is rejected when
#: ``|<post|pre>| <= ORTHO_TOL * norm(pre) * norm(post)``. The relative form
#: keeps unnormalized states valid.
ORTHO_TOL = 1e-10

TensorKind = Literal["weak", "expectation"]


def selection_overlap(pre: Ket, post: Ket) -> complex:
    """Overlap <post|pre>, guarded against (numerically) orthogonal selections."""
    if pre.dims != post.dims:
        raise ShapeMismatchError(f"shapes differ: {pre.dims} vs {post.dims}")
    overlap = inner(post, pre)
    if abs(overlap) <= ORTHO_TOL * norm(pre) * norm(post):
        raise OrthogonalSelectionError(
            f"selection overlap {overlap} is numerically zero; weak values are undefined"
        )
    return overlap


@dataclass(frozen=True, eq=False)
class WeakValueTensor:
    """Complex components indexed by joint basis label.

    ``kind="weak"``: weak values of full projector products for a pre/post
    pair; the components sum to 1 (completeness) and may be negative or
    complex. ``kind="expectation"``: squared amplitude magnitudes of a single
    normalized state; real, in [0, 1], and summing to 1. ``overlap`` stores
    the selection overlap ``<post|pre>`` for diagnostics.
    """

    dims: tuple[int, ...]
    components: np.ndarray
    kind: TensorKind
    overlap: complex

    def __post_init__(self):
        components = np.array(self.components, dtype=np.complex128).reshape(self.dims)
        components.setflags(write=False)
        object.__setattr__(self, "dims", tuple(self.dims))
        object.__setattr__(self, "components", components)

    @property
    def rank(self) -> int:
        return len(self.dims)

    def component(self, label: Sequence[int]) -> complex:
        return complex(self.components[tuple(label)])


def weak_value(pre: Ket, post: Ket, op: ProjectorProduct) -> complex:
    """Weak value ``<post| op |pre> / <post|pre>`` of a projector product.

    Invariant under nonzero complex rescaling of either state. Raises
    :class:`OrthogonalSelectionError` when the selection overlap is
    numerically zero (relative tolerance :data:`ORTHO_TOL`).
    """
    overlap = selection_overlap(pre, post)
    return inner(post, apply_projector_product(op, pre)) / overlap


def weak_tensor(pre: Ket, post: Ket) -> WeakValueTensor:
    """Tensor of weak values of the full projector products, one component
    per joint basis label."""
    overlap = selection_overlap(pre, post)
    components = (np.conj(post.amps) * pre.amps / overlap).reshape(pre.dims)
    return WeakValueTensor(pre.dims, components, "weak", overlap)


def expectation_tensor(state: Ket) -> WeakValueTensor:
    """Tensor of projector-product expectation values of a single state.

    The state is normalized internally, so the components are the squared
    amplitude magnitudes.
    """
    unit = normalize(state)
    components = (np.abs(unit.amps) ** 2).astype(np.complex128).reshape(state.dims)
    return WeakValueTensor(state.dims, components, "expectation", 1.0 + 0.0j)


def marginalize(t: WeakValueTensor, keep: int) -> list[complex]:
    """Sum the tensor over all axes but ``keep``.

    For a weak tensor this yields the weak value of each single-subsystem
    projector on the kept axis; for an expectation tensor, the level
    probabilities.
    """
    if not 0 <= keep < t.rank:
        raise SubsystemOutOfRangeError(f"axis {keep} not in a rank-{t.rank} tensor")
    other_axes = tuple(a for a in range(t.rank) if a != keep)
    summed = t.components.sum(axis=other_axes) if other_axes else t.components
    return [complex(v) for v in summed]


def total_sum(t: WeakValueTensor) -> complex:
    """Sum of all components (1 for both tensor kinds, up to rounding)."""
    return complex(t.components.sum())


def weak_value_observable(pre: Ket, post: Ket, matrix) -> complex:
    """Weak value ``<post| A |pre> / <post|pre>`` of a dense operator matrix.

    Brute-force route used as the independent oracle for the masking-based
    projector paths.
    """
    overlap = selection_overlap(pre, post)
    a = np.asarray(matrix, dtype=np.complex128)
    if a.shape != (pre.dim, pre.dim):
        raise ShapeMismatchError(f"operator shape {a.shape} does not match dimension {pre.dim}")
    return complex(np.vdot(post.amps, a @ pre.amps) / overlap)
