"""Diagonal projector Hamiltonians, exact phase evolution, and the named
product-form evolutions.

Every Hamiltonian here is diagonal in the computational basis (a sum of
coupling-weighted projector products), so time evolution is exact: amplitude
``k`` picks up the phase ``exp(-i * E_k * t)`` with hbar = 1.

The named product-form families (``psit1``, ``E111``, ``Hamm2``, ``GHZ2``,
``PsiGHZ11``) are closed-form factored evolutions of EPR- and GHZ-pair
systems in which every tensor factor accumulates its own phase. They do NOT
generally agree with exact evolution under the corresponding joint-projector
Hamiltonians (the joint projector phases a single joint amplitude, while the
product forms phase one component of every factor); :func:`compare_states`
quantifies the gap instead of deciding between them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    MissingParamError,
    ShapeMismatchError,
    UnknownFamilyError,
    ZeroVectorError,
)
from .hilbert import (
    Ket,
    ProjectorProduct,
    basis_label,
    check_dims,
    inner,
    norm,
    tensor_product,
    total_dim,
)
from .scenarios import ghz_ket

#: Both amplitudes must exceed this for a label to appear in a phase report.
PHASE_AMP_TOL = 1e-12


@dataclass(frozen=True)
class HamiltonianTerm:
    """A coupling energy attached to a projector product (hbar = 1)."""

    coupling: float
    selector: ProjectorProduct

    def __post_init__(self):
        if not math.isfinite(self.coupling):
            raise ValueError(f"coupling must be finite, got {self.coupling}")


@dataclass(frozen=True, eq=False)
class DiagonalHamiltonian:
    """Real energy per basis index, stored flat in big-endian order."""

    dims: tuple[int, ...]
    energies: np.ndarray

    def __post_init__(self):
        dims = check_dims(self.dims)
        energies = np.array(self.energies, dtype=np.float64).reshape(-1)
        if energies.size != total_dim(dims):
            raise ShapeMismatchError(
                f"expected {total_dim(dims)} energies for shape {dims}, got {energies.size}"
            )
        if not np.all(np.isfinite(energies)):
            raise ValueError("energies must be finite")
        energies.setflags(write=False)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "energies", energies)


def build_hamiltonian(dims: Sequence[int], terms: Iterable[HamiltonianTerm]) -> DiagonalHamiltonian:
    """Sum coupling-weighted projector products into a diagonal Hamiltonian.

    The energy at a basis label is the sum of the couplings of every term
    whose selector matches the label; overlapping terms add.
    """
    dims = check_dims(dims)
    energies = np.zeros(total_dim(dims), dtype=np.float64)
    shaped = energies.reshape(dims)
    for term in terms:
        term.selector.check_shape(dims)
        selector = [slice(None)] * len(dims)
        for s, lvl in term.selector.factors:
            selector[s] = lvl
        shaped[tuple(selector)] += term.coupling
    return DiagonalHamiltonian(dims, energies)


def evolve(state: Ket, h: DiagonalHamiltonian, t: float) -> Ket:
    """Exact evolution: amplitude k is multiplied by exp(-i * E_k * t)."""
    if state.dims != h.dims:
        raise ShapeMismatchError(f"state shape {state.dims} differs from {h.dims}")
    return Ket(state.dims, state.amps * np.exp(-1j * h.energies * t))


def epr_pair() -> Ket:
    """Normalized two-qubit state ``(|10> - |01>) / sqrt(2)``."""
    s = 1.0 / math.sqrt(2.0)
    return Ket((2, 2), np.array([0.0, -s, s, 0.0], dtype=np.complex128))


PRODUCT_FAMILIES = ("psit1", "E111", "Hamm2", "GHZ2", "PsiGHZ11")


def _require(value: float | None, name: str, family: str) -> float:
    if value is None:
        raise MissingParamError(f"family {family!r} requires parameter {name!r}")
    return float(value)


def _epr_factor(phase_10: complex = 1.0, phase_01: complex = 1.0) -> Ket:
    s = 1.0 / math.sqrt(2.0)
    return Ket((2, 2), np.array([0.0, -phase_01 * s, phase_10 * s, 0.0]))


def _ghz_factor(phase_000: complex = 1.0, phase_111: complex = 1.0) -> Ket:
    s = 1.0 / math.sqrt(2.0)
    amps = np.zeros(8, dtype=np.complex128)
    amps[0] = phase_000 * s
    amps[7] = phase_111 * s
    return Ket((2, 2, 2), amps)


def _chain(factors: list[Ket]) -> Ket:
    out = factors[0]
    for f in factors[1:]:
        out = tensor_product(out, f)
    return out


def product_form(
    family: str,
    t: float,
    eps: float | None = None,
    eps2: float | None = None,
    phi: float | None = None,
) -> Ket:
    """State of the named product-form evolution at time ``t``.

    Families and their parameters (each factor normalized; phases sit on the
    components each family marks):

    * ``psit1`` (eps): two EPR pairs, ``e^{-i*eps*t}`` on each ``|10>``.
    * ``E111`` (eps): three EPR pairs, same phasing.
    * ``Hamm2`` (eps, eps2): three EPR pairs with phases ``e^{-i*eps*t}``,
      ``e^{-i*(eps-eps2)*t}`` on ``|10>`` of pairs 1 and 2 and
      ``e^{-i*eps2*t}`` on ``|01>`` of pair 3.
    * ``GHZ2`` (phi): two GHZ cubes, ``e^{-i*phi*t}`` on each ``|000>``.
    * ``PsiGHZ11`` (phi, eps): three GHZ cubes with ``e^{-i*phi*t}`` on
      ``|000>`` of cube 1, ``e^{+i*eps*t}`` on ``|000>`` of cube 2 and
      ``e^{-i*(phi+eps)*t}`` on ``|111>`` of cube 3.
    """
    if family == "psit1":
        e = _require(eps, "eps", family)
        f = _epr_factor(phase_10=np.exp(-1j * e * t))
        return _chain([f, f])
    if family == "E111":
        e = _require(eps, "eps", family)
        f = _epr_factor(phase_10=np.exp(-1j * e * t))
        return _chain([f, f, f])
    if family == "Hamm2":
        e1 = _require(eps, "eps", family)
        e2 = _require(eps2, "eps2", family)
        return _chain(
            [
                _epr_factor(phase_10=np.exp(-1j * e1 * t)),
                _epr_factor(phase_10=np.exp(-1j * (e1 - e2) * t)),
                _epr_factor(phase_01=np.exp(-1j * e2 * t)),
            ]
        )
    if family == "GHZ2":
        p = _require(phi, "phi", family)
        g = _ghz_factor(phase_000=np.exp(-1j * p * t))
        return _chain([g, g])
    if family == "PsiGHZ11":
        p = _require(phi, "phi", family)
        e = _require(eps, "eps", family)
        beta = p + e
        return _chain(
            [
                _ghz_factor(phase_000=np.exp(-1j * p * t)),
                _ghz_factor(phase_000=np.exp(1j * e * t)),
                _ghz_factor(phase_111=np.exp(-1j * beta * t)),
            ]
        )
    raise UnknownFamilyError(f"unknown family {family!r}; expected one of {PRODUCT_FAMILIES}")


def _all_pairs_10_selector(n_pairs: int) -> ProjectorProduct:
    # joint |10> on every pair: qubit 2j at level 1, qubit 2j+1 at level 0
    return ProjectorProduct(tuple((q, 1 - q % 2) for q in range(2 * n_pairs)))


def multiwise_epr_hamiltonian(eps: float, n_pairs: int = 2) -> DiagonalHamiltonian:
    """Joint-projector coupling of ``n_pairs`` EPR pairs: a single term of
    energy ``eps`` on the joint ``|10>...|10>`` label."""
    return build_hamiltonian(
        (2,) * (2 * n_pairs), [HamiltonianTerm(eps, _all_pairs_10_selector(n_pairs))]
    )


def paired_epr_hamiltonian(eps1: float, eps2: float, n_pairs: int = 2) -> DiagonalHamiltonian:
    """Two-term coupling of EPR pairs 1 and 2: ``eps1`` on the joint
    ``|10>|10>`` label and ``eps2`` on the joint ``|01>|01>`` label, with any
    further pairs uncoupled."""
    if n_pairs < 2:
        raise ValueError("need at least the two coupled pairs")
    sel_10 = ProjectorProduct(((0, 1), (1, 0), (2, 1), (3, 0)))
    sel_01 = ProjectorProduct(((0, 0), (1, 1), (2, 0), (3, 1)))
    return build_hamiltonian(
        (2,) * (2 * n_pairs), [HamiltonianTerm(eps1, sel_10), HamiltonianTerm(eps2, sel_01)]
    )


def multiwise_ghz_hamiltonian(phi: float, n_cubes: int = 2) -> DiagonalHamiltonian:
    """Joint-projector coupling of ``n_cubes`` GHZ cubes: a single term of
    energy ``phi`` on the all-zeros label."""
    sel = ProjectorProduct(tuple((q, 0) for q in range(3 * n_cubes)))
    return build_hamiltonian((2,) * (3 * n_cubes), [HamiltonianTerm(phi, sel)])


def exact_counterpart(
    family: str,
    t: float,
    eps: float | None = None,
    eps2: float | None = None,
    phi: float | None = None,
) -> Ket:
    """Exact diagonal evolution of the system behind a product-form family.

    The initial state is the product of EPR pairs or GHZ cubes and the
    Hamiltonian is the corresponding joint-projector coupling:

    * ``psit1``: EPR x EPR under eps on the joint ``|10>|10>`` label.
    * ``E111``: three EPR pairs under eps on the joint all-``|10>`` label.
    * ``Hamm2``: three EPR pairs; the two stated couplings act on pairs 1
      and 2 (eps on joint ``|10>|10>``, eps2 on joint ``|01>|01>``) and
      pair 3 is uncoupled.
    * ``GHZ2``: GHZ x GHZ under phi on the all-zeros label.
    * ``PsiGHZ11``: three GHZ cubes with phi on the all-zeros label of
      cubes 1 and 2 and ``phi + eps`` on the all-ones label of cubes 2
      and 3 (the third cube sits at the ``|111>`` corner of the second).
    """
    if family == "psit1":
        e = _require(eps, "eps", family)
        return evolve(_chain([epr_pair()] * 2), multiwise_epr_hamiltonian(e, 2), t)
    if family == "E111":
        e = _require(eps, "eps", family)
        return evolve(_chain([epr_pair()] * 3), multiwise_epr_hamiltonian(e, 3), t)
    if family == "Hamm2":
        e1 = _require(eps, "eps", family)
        e2 = _require(eps2, "eps2", family)
        return evolve(_chain([epr_pair()] * 3), paired_epr_hamiltonian(e1, e2, n_pairs=3), t)
    if family == "GHZ2":
        p = _require(phi, "phi", family)
        return evolve(
            _chain([ghz_ket(3, 2)] * 2), multiwise_ghz_hamiltonian(p, 2), t
        )
    if family == "PsiGHZ11":
        p = _require(phi, "phi", family)
        e = _require(eps, "eps", family)
        dims = (2,) * 9
        zeros_12 = ProjectorProduct(tuple((q, 0) for q in range(6)))
        ones_23 = ProjectorProduct(tuple((q, 1) for q in range(3, 9)))
        h = build_hamiltonian(
            dims, [HamiltonianTerm(p, zeros_12), HamiltonianTerm(p + e, ones_23)]
        )
        return evolve(_chain([ghz_ket(3, 2)] * 3), h, t)
    raise UnknownFamilyError(f"unknown family {family!r}; expected one of {PRODUCT_FAMILIES}")


@dataclass(frozen=True)
class ComparisonReport:
    """Fidelity and gauge-fixed max amplitude difference of two states."""

    fidelity: float
    max_component_diff: float


def _gauge_fixed(k: Ket) -> np.ndarray:
    # unit norm, global phase fixed so the largest-magnitude amplitude is
    # real and positive
    u = k.amps / norm(k)
    anchor = u[int(np.argmax(np.abs(u)))]
    return u * (np.conj(anchor) / abs(anchor))


def compare_states(a: Ket, b: Ket) -> ComparisonReport:
    """Report how far two states are from equal up to norm and global phase.

    ``fidelity`` is ``|<a|b>|^2 / (<a|a><b|b>)``; ``max_component_diff`` is
    the largest amplitude difference between the normalized representatives
    after aligning each state's global phase to its largest-magnitude
    component.
    """
    if a.dims != b.dims:
        raise ShapeMismatchError(f"shapes differ: {a.dims} vs {b.dims}")
    na, nb = norm(a), norm(b)
    if na <= 1e-12 or nb <= 1e-12:
        raise ZeroVectorError("cannot compare (near-)zero states")
    fidelity = abs(inner(a, b)) ** 2 / (na**2 * nb**2)
    diff = float(np.max(np.abs(_gauge_fixed(a) - _gauge_fixed(b))))
    return ComparisonReport(fidelity=float(fidelity), max_component_diff=diff)


def phase_report(state: Ket, reference: Ket) -> dict[tuple[int, ...], float]:
    """Relative phase ``arg(state_k / reference_k)`` per basis label.

    Only labels where both amplitudes exceed :data:`PHASE_AMP_TOL` are
    reported; phases lie in ``(-pi, pi]``.
    """
    if state.dims != reference.dims:
        raise ShapeMismatchError(f"shapes differ: {state.dims} vs {reference.dims}")
    report: dict[tuple[int, ...], float] = {}
    for k in range(state.dim):
        s, r = state.amps[k], reference.amps[k]
        if abs(s) > PHASE_AMP_TOL and abs(r) > PHASE_AMP_TOL:
            phase = float(np.angle(s / r)) + 0.0  # folds -0.0 into +0.0
            if phase <= -math.pi:
                phase += 2.0 * math.pi
            report[basis_label(k, state.dims)] = phase
    return report
