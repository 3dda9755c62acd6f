import math

import numpy as np
import pytest
from scipy.linalg import expm

from weaktensor import (
    HamiltonianTerm,
    Ket,
    MissingParamError,
    ProjectorProduct,
    ShapeMismatchError,
    UnknownFamilyError,
    ZeroVectorError,
    build_hamiltonian,
    compare_states,
    epr_pair,
    evolve,
    exact_counterpart,
    expectation_tensor,
    flat_index,
    ghz_ket,
    multiwise_epr_hamiltonian,
    multiwise_ghz_hamiltonian,
    norm,
    paired_epr_hamiltonian,
    phase_report,
    product_form,
    tensor_product,
)
from oracles import random_state

S2 = 1.0 / math.sqrt(2.0)

#: selector of the joint |10>|10> label of two EPR pairs
JOINT_10_10 = ProjectorProduct(((0, 1), (1, 0), (2, 1), (3, 0)))


def epr_epr():
    return tensor_product(epr_pair(), epr_pair())


# ---------------------------------------------------------------- hamiltonians


def test_joint_epr_coupling_has_single_energy():
    h = build_hamiltonian((2, 2, 2, 2), [HamiltonianTerm(0.8, JOINT_10_10)])
    expected = np.zeros(16)
    expected[flat_index((1, 0, 1, 0), (2, 2, 2, 2))] = 0.8
    np.testing.assert_array_equal(h.energies, expected)
    np.testing.assert_array_equal(multiwise_epr_hamiltonian(0.8, 2).energies, expected)


def test_three_pair_joint_coupling_has_single_energy():
    h = multiwise_epr_hamiltonian(0.6, n_pairs=3)
    expected = np.zeros(64)
    expected[flat_index((1, 0, 1, 0, 1, 0), (2,) * 6)] = 0.6
    np.testing.assert_array_equal(h.energies, expected)


def test_two_term_epr_coupling():
    h = paired_epr_hamiltonian(0.3, 0.9)
    expected = np.zeros(16)
    expected[flat_index((1, 0, 1, 0), (2, 2, 2, 2))] = 0.3
    expected[flat_index((0, 1, 0, 1), (2, 2, 2, 2))] = 0.9
    np.testing.assert_array_equal(h.energies, expected)


def test_empty_term_list_gives_zero_hamiltonian():
    h = build_hamiltonian((2, 3), [])
    np.testing.assert_array_equal(h.energies, np.zeros(6))


def test_overlapping_terms_add():
    t1 = HamiltonianTerm(0.25, ProjectorProduct(((0, 1),)))
    t2 = HamiltonianTerm(0.5, ProjectorProduct(((0, 1), (1, 0))))
    h = build_hamiltonian((2, 2), [t1, t2])
    np.testing.assert_array_equal(h.energies, [0.0, 0.0, 0.75, 0.25])


def test_hamiltonian_term_validation():
    with pytest.raises(ValueError):
        HamiltonianTerm(float("inf"), ProjectorProduct())
    from weaktensor import SubsystemOutOfRangeError

    with pytest.raises(SubsystemOutOfRangeError):
        build_hamiltonian((2, 2), [HamiltonianTerm(1.0, ProjectorProduct(((5, 0),)))])


def test_ghz_coupling_energy_on_all_zeros():
    h = multiwise_ghz_hamiltonian(1.7, 2)
    expected = np.zeros(64)
    expected[0] = 1.7
    np.testing.assert_array_equal(h.energies, expected)


# ---------------------------------------------------------------- evolution


def test_evolve_at_time_zero_is_identity():
    h = multiwise_epr_hamiltonian(0.9, 2)
    state = epr_epr()
    np.testing.assert_array_equal(evolve(state, h, 0.0).amps, state.amps)


def test_evolve_phases_only_the_joint_epr_label():
    eps, t = 0.9, 1.3
    h = multiwise_epr_hamiltonian(eps, 2)
    state = epr_epr()
    out = evolve(state, h, t)
    joint = flat_index((1, 0, 1, 0), (2, 2, 2, 2))
    assert out.amps[joint] == pytest.approx(state.amps[joint] * np.exp(-1j * eps * t))
    untouched = np.arange(16) != joint
    np.testing.assert_array_equal(out.amps[untouched], state.amps[untouched])


def test_evolve_phases_only_the_joint_ghz_label():
    phi, t = 0.4, 2.1
    state = tensor_product(ghz_ket(3, 2), ghz_ket(3, 2))
    out = evolve(state, multiwise_ghz_hamiltonian(phi, 2), t)
    assert out.amps[0] == pytest.approx(state.amps[0] * np.exp(-1j * phi * t))
    np.testing.assert_array_equal(out.amps[1:], state.amps[1:])


def test_evolve_shape_mismatch():
    with pytest.raises(ShapeMismatchError):
        evolve(epr_pair(), multiwise_epr_hamiltonian(1.0, 2), 0.5)


def test_evolve_matches_dense_expm_oracle():
    rng = np.random.default_rng(41)
    cases = [
        (multiwise_epr_hamiltonian(0.7, 2), (2, 2, 2, 2)),
        (multiwise_ghz_hamiltonian(0.3, 2), (2,) * 6),
        (paired_epr_hamiltonian(0.7, 1.9, n_pairs=3), (2,) * 6),
        (
            build_hamiltonian((2, 3), [HamiltonianTerm(0.5, ProjectorProduct(((1, 2),)))]),
            (2, 3),
        ),
    ]
    for h, dims in cases:
        state = Ket(dims, random_state(rng, dims))
        t = 1.234
        fast = evolve(state, h, t)
        u = expm(-1j * np.diag(h.energies) * t)
        np.testing.assert_allclose(fast.amps, u @ state.amps, atol=1e-10)


def test_evolve_composition_additive_in_time():
    h = paired_epr_hamiltonian(0.31, 0.77)
    rng = np.random.default_rng(42)
    state = Ket((2, 2, 2, 2), random_state(rng, (2, 2, 2, 2)))
    a = evolve(evolve(state, h, 0.6), h, 1.1)
    b = evolve(state, h, 1.7)
    np.testing.assert_allclose(a.amps, b.amps, atol=1e-10)


def test_evolve_preserves_amplitude_magnitudes():
    h = multiwise_epr_hamiltonian(1.1, 2)
    state = epr_epr()
    out = evolve(state, h, 17.3)
    np.testing.assert_allclose(np.abs(out.amps), np.abs(state.amps), rtol=1e-14, atol=1e-15)


def test_norm_drift_over_accumulated_steps():
    # long evolutions are single closed-form calls: accumulate 1e6 steps of
    # time and evolve once
    h = multiwise_epr_hamiltonian(0.7, 2)
    state = epr_epr()
    dt, steps = 1e-3, 10**6
    out = evolve(state, h, steps * dt)
    assert abs(norm(out) - norm(state)) < 1e-12
    # a chain of 1000 repeated applications also stays within the budget
    chained = state
    for _ in range(1000):
        chained = evolve(chained, h, dt)
    assert abs(norm(chained) - norm(state)) < 1e-12


def test_evolve_periodicity_of_single_coupling():
    eps = 0.9
    h = multiwise_epr_hamiltonian(eps, 2)
    state = epr_epr()
    period = 2.0 * math.pi / eps
    for t in (0.0, 0.4, 3.3):
        a = evolve(state, h, t)
        b = evolve(state, h, t + period)
        np.testing.assert_allclose(a.amps, b.amps, atol=1e-10)


# ---------------------------------------------------------------- epr pair


def test_epr_pair_amplitudes():
    np.testing.assert_array_equal(epr_pair().amps, np.array([0.0, -S2, S2, 0.0], dtype=complex))


def test_epr_pair_expectation_tensor():
    t = expectation_tensor(epr_pair())
    np.testing.assert_allclose(t.components, [[0.0, 0.5], [0.5, 0.0]], atol=1e-12)


# ---------------------------------------------------------------- product forms


def test_product_forms_at_time_zero_are_exact_products():
    np.testing.assert_array_equal(product_form("psit1", 0.0, eps=0.9).amps, epr_epr().amps)
    three_epr = tensor_product(epr_epr(), epr_pair())
    np.testing.assert_array_equal(product_form("E111", 0.0, eps=0.9).amps, three_epr.amps)
    np.testing.assert_array_equal(
        product_form("Hamm2", 0.0, eps=0.9, eps2=0.3).amps, three_epr.amps
    )
    ghz_ghz = tensor_product(ghz_ket(3, 2), ghz_ket(3, 2))
    np.testing.assert_array_equal(product_form("GHZ2", 0.0, phi=0.4).amps, ghz_ghz.amps)
    ghz_cubed = tensor_product(ghz_ghz, ghz_ket(3, 2))
    np.testing.assert_array_equal(
        product_form("PsiGHZ11", 0.0, phi=0.4, eps=0.1).amps, ghz_cubed.amps
    )


def test_psit1_joint_amplitude_at_quarter_period():
    # both factors carry e^{-i*eps*t} on |10>, so the joint |10>|10>
    # amplitude is e^{-i*pi}/2 = -1/2 at eps*t = pi/2
    state = product_form("psit1", math.pi / 2.0, eps=1.0)
    joint = flat_index((1, 0, 1, 0), (2, 2, 2, 2))
    assert state.amps[joint] == pytest.approx(-0.5)


def test_hamm2_factor_phases():
    eps, eps2, t = 0.9, 0.4, 1.7
    state = product_form("Hamm2", t, eps=eps, eps2=eps2)
    dims = (2,) * 6
    label_value = {
        # (pair1, pair2, pair3) components of the factored form
        (1, 0, 1, 0, 1, 0): np.exp(-1j * eps * t)
        * np.exp(-1j * (eps - eps2) * t)
        * (S2**3),
        (1, 0, 1, 0, 0, 1): np.exp(-1j * eps * t)
        * np.exp(-1j * (eps - eps2) * t)
        * np.exp(-1j * eps2 * t)
        * -(S2**3),
        (0, 1, 0, 1, 1, 0): S2**3,
    }
    for label, value in label_value.items():
        assert state.amps[flat_index(label, dims)] == pytest.approx(value)


def test_ghz2_phases():
    phi, t = 0.8, 0.9
    state = product_form("GHZ2", t, phi=phi)
    dims = (2,) * 6
    assert state.amps[flat_index((0,) * 6, dims)] == pytest.approx(
        0.5 * np.exp(-2j * phi * t)
    )
    assert state.amps[flat_index((0, 0, 0, 1, 1, 1), dims)] == pytest.approx(
        0.5 * np.exp(-1j * phi * t)
    )
    assert state.amps[flat_index((1,) * 6, dims)] == pytest.approx(0.5)


def test_psighz11_with_zero_eps_leaves_cube2_unphased():
    phi, t = 0.6, 2.0
    state = product_form("PsiGHZ11", t, phi=phi, eps=0.0)
    reference = product_form("PsiGHZ11", 0.0, phi=phi, eps=0.0)
    phases = phase_report(state, reference)
    # the phase depends only on cubes 1 and 3: flipping cube 2 changes nothing
    for c1 in ((0, 0, 0), (1, 1, 1)):
        for c3 in ((0, 0, 0), (1, 1, 1)):
            low = phases[c1 + (0, 0, 0) + c3]
            high = phases[c1 + (1, 1, 1) + c3]
            assert low == pytest.approx(high, abs=1e-12)


def test_product_form_errors():
    with pytest.raises(UnknownFamilyError):
        product_form("psit9", 1.0, eps=1.0)
    with pytest.raises(MissingParamError):
        product_form("psit1", 1.0)
    with pytest.raises(MissingParamError):
        product_form("Hamm2", 1.0, eps=1.0)
    with pytest.raises(MissingParamError):
        product_form("PsiGHZ11", 1.0, phi=1.0)


# -------------------------------------------------- exact vs product forms


def test_exact_counterpart_at_time_zero():
    np.testing.assert_array_equal(exact_counterpart("psit1", 0.0, eps=1.0).amps, epr_epr().amps)


def test_exact_and_product_form_disagree_at_quarter_period():
    t = math.pi / 2.0
    report = compare_states(
        exact_counterpart("psit1", t, eps=1.0), product_form("psit1", t, eps=1.0)
    )
    assert report.fidelity < 1.0
    assert report.fidelity == pytest.approx(0.625, abs=1e-12)


def test_exact_counterpart_families_run():
    for family, params in [
        ("psit1", dict(eps=0.5)),
        ("E111", dict(eps=0.5)),
        ("Hamm2", dict(eps=0.5, eps2=0.2)),
        ("GHZ2", dict(phi=0.5)),
        ("PsiGHZ11", dict(phi=0.5, eps=0.2)),
    ]:
        exact = exact_counterpart(family, 0.7, **params)
        form = product_form(family, 0.7, **params)
        assert exact.dims == form.dims
        assert norm(exact) == pytest.approx(1.0, abs=1e-12)


# ---------------------------------------------------------------- comparison


def test_compare_states_identical():
    state = epr_epr()
    report = compare_states(state, state)
    assert report.fidelity == pytest.approx(1.0)
    assert report.max_component_diff == 0.0


def test_compare_states_global_phase_invisible():
    state = epr_epr()
    rotated = Ket(state.dims, np.exp(0.7j) * state.amps)
    report = compare_states(state, rotated)
    assert report.fidelity == pytest.approx(1.0, abs=1e-12)
    assert report.max_component_diff < 1e-12


def test_compare_states_errors():
    with pytest.raises(ShapeMismatchError):
        compare_states(epr_pair(), epr_epr())
    with pytest.raises(ZeroVectorError):
        compare_states(epr_pair(), Ket((2, 2), np.zeros(4)))


# ---------------------------------------------------------------- phase report


def test_phase_report_of_joint_epr_evolution():
    eps, t = 0.9, 0.8
    state = epr_epr()
    evolved = evolve(state, multiwise_epr_hamiltonian(eps, 2), t)
    report = phase_report(evolved, state)
    assert set(report) == {(0, 1, 0, 1), (0, 1, 1, 0), (1, 0, 0, 1), (1, 0, 1, 0)}
    assert report[(1, 0, 1, 0)] == pytest.approx(-eps * t)
    for label in ((0, 1, 0, 1), (0, 1, 1, 0), (1, 0, 0, 1)):
        assert report[label] == 0.0


def test_phase_report_against_itself_is_zero():
    state = product_form("GHZ2", 1.3, phi=0.7)
    report = phase_report(state, state)
    assert report
    assert all(p == 0.0 for p in report.values())


def test_phase_report_skips_vanishing_amplitudes():
    a = Ket((2,), np.array([1.0, 0.0]))
    b = Ket((2,), np.array([1.0, 1.0]))
    assert set(phase_report(a, b)) == {(0,)}


def test_phase_report_range():
    # a phase just past pi wraps into (-pi, pi]
    a = Ket((2,), np.array([np.exp(1j * (math.pi + 0.1)), 1.0]))
    b = Ket((2,), np.array([1.0, 1.0]))
    phase = phase_report(a, b)[(0,)]
    assert -math.pi < phase <= math.pi
    assert phase == pytest.approx(-math.pi + 0.1)
