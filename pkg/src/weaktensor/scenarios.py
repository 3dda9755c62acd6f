"""Catalog of named pre/post-selected scenarios with labeled axes.

Axis conventions are fixed here so that every documented tensor is
reproduced verbatim:

* ``cheshire``: axis 0 is the spin (levels ``↑``, ``↓``), axis 1 is the
  position (levels ``L``, ``R``). Grids therefore read rows = spin,
  columns = position.
* ``hardy``: axis 0 is the positron (``L_p``, ``R_p``), axis 1 is the
  electron (``L_e``, ``R_e``). The Hardy states are kept unnormalized;
  weak values are unaffected by rescaling.
* The two weak tensors coincide under the documented relabeling: swap the
  Hardy axes (electron first) and identify ``L_e -> ↑``, ``R_e -> ↓``,
  ``L_p -> L``, ``R_p -> R``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import (
    InvalidCountError,
    LabelMismatchError,
    MissingParamError,
    ShapeMismatchError,
    WrongScenarioError,
)
from .hilbert import Ket, check_dims, make_ket, total_dim
from .weakvalues import WeakValueTensor, expectation_tensor, selection_overlap, weak_tensor


def default_labels(dims: Sequence[int]) -> tuple[tuple[str, ...], ...]:
    """Digit labels, one tuple per axis."""
    return tuple(tuple(str(i) for i in range(d)) for d in dims)


@dataclass(frozen=True, eq=False)
class Scenario:
    """A named pre/post state pair with per-axis level labels.

    ``post`` is ``None`` for expectation-only scenarios. Construction
    verifies that the labels fit the shape and, when a post state is
    present, that the selection is not orthogonal.
    """

    name: str
    pre: Ket
    post: Ket | None
    axis_labels: tuple[tuple[str, ...], ...]
    params: dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        labels = tuple(tuple(str(l) for l in axis) for axis in self.axis_labels)
        if len(labels) != len(self.pre.dims) or any(
            len(axis) != d for axis, d in zip(labels, self.pre.dims)
        ):
            raise LabelMismatchError(
                f"labels {labels} do not match shape {self.pre.dims}"
            )
        object.__setattr__(self, "axis_labels", labels)
        if self.post is not None:
            if self.post.dims != self.pre.dims:
                raise ShapeMismatchError(
                    f"post shape {self.post.dims} differs from pre shape {self.pre.dims}"
                )
            selection_overlap(self.pre, self.post)

    @property
    def dims(self) -> tuple[int, ...]:
        return self.pre.dims

    def tensor(self) -> WeakValueTensor:
        """Weak tensor when post-selected, expectation tensor otherwise."""
        if self.post is None:
            return expectation_tensor(self.pre)
        return weak_tensor(self.pre, self.post)

    def overlap(self) -> complex | None:
        return None if self.post is None else selection_overlap(self.pre, self.post)


_BELL_AMPS = {
    "psi+": (0.0, 1.0, 1.0, 0.0),
    "psi-": (0.0, 1.0, -1.0, 0.0),
    "phi+": (1.0, 0.0, 0.0, 1.0),
    "phi-": (1.0, 0.0, 0.0, -1.0),
}

_BELL_NAMES = {
    "psi+": "bell-psi-plus",
    "psi-": "bell-psi-minus",
    "phi+": "bell-phi-plus",
    "phi-": "bell-phi-minus",
}


def bell(kind: str) -> Scenario:
    """Two-qubit Bell state scenario; kind is one of psi+, psi-, phi+, phi-."""
    if kind not in _BELL_AMPS:
        raise ValueError(f"unknown Bell kind {kind!r}; expected one of {sorted(_BELL_AMPS)}")
    amps = np.array(_BELL_AMPS[kind]) / math.sqrt(2.0)
    return Scenario(_BELL_NAMES[kind], make_ket((2, 2), amps), None, default_labels((2, 2)))


def ghz_ket(parties: int, levels: int, all_diagonal: bool = False) -> Ket:
    """Diagonal superposition state.

    Two-term form ``(|0...0> + |(levels-1)...(levels-1)>) / sqrt(2)`` by
    default; ``all_diagonal`` yields the uniform sum over every ``|j...j>``.
    """
    if parties < 2 or levels < 2:
        raise InvalidCountError(f"need parties >= 2 and levels >= 2, got ({parties}, {levels})")
    dims = check_dims((levels,) * parties)
    amps = np.zeros(total_dim(dims), dtype=np.complex128)
    stride = (levels**parties - 1) // (levels - 1)  # flat step between |j...j> and |j+1...j+1>
    if all_diagonal:
        for j in range(levels):
            amps[j * stride] = 1.0 / math.sqrt(levels)
    else:
        amps[0] = 1.0 / math.sqrt(2.0)
        amps[(levels - 1) * stride] = 1.0 / math.sqrt(2.0)
    return Ket(dims, amps)


def ghz(parties: int, levels: int, all_diagonal: bool = False) -> Scenario:
    """GHZ scenario (expectation-only)."""
    state = ghz_ket(parties, levels, all_diagonal)
    return Scenario("ghz", state, None, default_labels(state.dims))


def cheshire() -> Scenario:
    """Separated spin/position scenario on shape (2, 2).

    Pre state ``(|↑L> + |↑R> + |↓R>) / sqrt(3)`` and post state
    ``(|↑L> - |↑R> + |↓R>) / sqrt(3)``; the weak tensor is
    ``((1, -1), (0, 1))`` in (spin, position) order.
    """
    s = 1.0 / math.sqrt(3.0)
    pre = make_ket((2, 2), [s, s, 0.0, s])
    post = make_ket((2, 2), [s, -s, 0.0, s])
    return Scenario("cheshire", pre, post, (("↑", "↓"), ("L", "R")))


def hardy() -> Scenario:
    """Interferometer pair scenario on shape (2, 2), states unnormalized.

    Pre state ``|L_p L_e> + |R_p L_e> + |R_p R_e>`` (the annihilated
    ``|L_p R_e>`` component removed) and post state
    ``(|L_p> - |R_p>)(|L_e> - |R_e>)``.
    """
    pre = make_ket((2, 2), [1.0, 0.0, 1.0, 1.0])
    post = make_ket((2, 2), [1.0, -1.0, -1.0, 1.0])
    return Scenario("hardy", pre, post, (("L_p", "R_p"), ("L_e", "R_e")))


#: Overlap-based relabeling of the hardy axes: the positron's left arm and
#: the electron's right arm are the overlapping ("O") ones.
_HARDY_OVERLAP_LABELS = (("O", "NO"), ("NO", "O"))


def hardy_overlap_labels(s: Scenario) -> Scenario:
    """Relabel the hardy axes by arm overlap (O / NO).

    Positron: ``L_p -> O``, ``R_p -> NO``; electron: ``R_e -> O``,
    ``L_e -> NO``. Labels are metadata: the tensor components are unchanged,
    and the transformation is idempotent.
    """
    if s.name not in ("hardy", "hardy-overlap"):
        raise WrongScenarioError(f"expected the hardy scenario, got {s.name!r}")
    return Scenario("hardy-overlap", s.pre, s.post, _HARDY_OVERLAP_LABELS, dict(s.params))


def hardy_gamma(gamma: float) -> Scenario:
    """Phase-coupled deformation of the hardy scenario.

    Instead of removing the overlap component ``|L_p R_e>``, the interaction
    leaves it with a relative phase: pre state ``|L_p L_e> +
    e^{i*gamma}|L_p R_e> + |R_p L_e> + |R_p R_e>``, post state as in
    :func:`hardy`. The selection overlap is ``1 - e^{i*gamma}``, so the
    components diverge as gamma approaches 0 (the construction is a
    deformation of the paradox, not a limit recovery), and gamma = 0 is
    rejected as an orthogonal selection.
    """
    pre = make_ket((2, 2), [1.0, np.exp(1j * gamma), 1.0, 1.0])
    post = make_ket((2, 2), [1.0, -1.0, -1.0, 1.0])
    return Scenario(
        "hardy-gamma", pre, post, (("L_p", "R_p"), ("L_e", "R_e")), {"gamma": float(gamma)}
    )


def ghz3_selected() -> Scenario:
    """Three-qutrit diagonal selection on shape (3, 3, 3).

    Pre state ``(|000> + |111> + |222>) / sqrt(3)`` and post state
    ``(|000> + |111> - |222>) / sqrt(3)``; the weak tensor has diagonal
    ``(1, 1, -1)`` and zeros elsewhere.
    """
    s = 1.0 / math.sqrt(3.0)
    pre_amps = np.zeros(27, dtype=np.complex128)
    post_amps = np.zeros(27, dtype=np.complex128)
    pre_amps[[0, 13, 26]] = s
    post_amps[[0, 13, 26]] = (s, s, -s)
    dims = (3, 3, 3)
    return Scenario("ghz3-selected", Ket(dims, pre_amps), Ket(dims, post_amps), default_labels(dims))


def custom(
    pre: Ket,
    post: Ket | None = None,
    labels: Sequence[Sequence[str]] | None = None,
    name: str = "custom",
) -> Scenario:
    """Wrap user-supplied states as a scenario (e.g. for the CLI pipeline)."""
    if labels is None:
        labels = default_labels(pre.dims)
    labels = tuple(tuple(axis) for axis in labels)
    return Scenario(name, pre, post, labels)


#: Scenario names exposed to the CLI; ``hardy-gamma`` requires a gamma value
#: and ``ghz`` accepts party/level counts.
SCENARIO_NAMES = (
    "bell-psi-plus",
    "bell-psi-minus",
    "bell-phi-plus",
    "bell-phi-minus",
    "ghz",
    "cheshire",
    "hardy",
    "hardy-overlap",
    "hardy-gamma",
    "ghz3-selected",
)


def build_named(
    name: str,
    gamma: float | None = None,
    parties: int = 3,
    levels: int = 2,
) -> Scenario:
    """Build a scenario from its CLI name."""
    if name.startswith("bell-"):
        kind = name.removeprefix("bell-").replace("-plus", "+").replace("-minus", "-")
        return bell(kind)
    if name == "ghz":
        return ghz(parties, levels)
    if name == "cheshire":
        return cheshire()
    if name == "hardy":
        return hardy()
    if name == "hardy-overlap":
        return hardy_overlap_labels(hardy())
    if name == "hardy-gamma":
        if gamma is None:
            raise MissingParamError("hardy-gamma requires a gamma value")
        return hardy_gamma(gamma)
    if name == "ghz3-selected":
        return ghz3_selected()
    raise ValueError(f"unknown scenario {name!r}; expected one of {SCENARIO_NAMES}")
