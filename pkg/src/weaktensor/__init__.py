"""Weak-value tensors of projector products for pre- and post-selected
multi-qudit systems, with scenario catalogs, multiwise-interaction dynamics,
hypercube realizations, and grid/SVG rendering."""

from .errors import (
    DimensionOverflowError,
    DuplicateSubsystemError,
    InvalidCountError,
    LabelMismatchError,
    LengthMismatchError,
    LevelOutOfRangeError,
    MissingParamError,
    NonFiniteAmplitudeError,
    NonQubitShapeError,
    NonUniformShapeError,
    NotThreeAxesError,
    NotTwoAxesError,
    OrthogonalSelectionError,
    OutOfRangeError,
    ParseError,
    SchemaViolationError,
    ShapeMismatchError,
    SubsystemOutOfRangeError,
    UnknownFamilyError,
    UnsupportedRankError,
    WeakTensorError,
    WrongScenarioError,
    ZeroVectorError,
)
from .hilbert import (
    MAX_DIMENSION,
    Ket,
    ProjectorProduct,
    apply_pauli_string,
    apply_projector_product,
    basis_label,
    basis_state,
    check_dims,
    flat_index,
    inner,
    make_ket,
    norm,
    normalize,
    tensor_product,
    total_dim,
)
from .weakvalues import (
    ORTHO_TOL,
    WeakValueTensor,
    expectation_tensor,
    marginalize,
    selection_overlap,
    total_sum,
    weak_tensor,
    weak_value,
    weak_value_observable,
)
from .scenarios import (
    SCENARIO_NAMES,
    Scenario,
    bell,
    build_named,
    cheshire,
    custom,
    ghz,
    ghz3_selected,
    ghz_ket,
    hardy,
    hardy_gamma,
    hardy_overlap_labels,
)
from .dynamics import (
    PRODUCT_FAMILIES,
    ComparisonReport,
    DiagonalHamiltonian,
    HamiltonianTerm,
    build_hamiltonian,
    compare_states,
    epr_pair,
    evolve,
    exact_counterpart,
    multiwise_epr_hamiltonian,
    multiwise_ghz_hamiltonian,
    paired_epr_hamiltonian,
    phase_report,
    product_form,
)
from .realization import (
    basis_to_cell,
    cell_to_basis,
    diagonal_cells,
    is_diagonal_supported,
    stabilizer_eigenvalue,
)
from .render import render_cube, render_grid, render_svg
from .schemefile import (
    SchemeDocument,
    document_to_json,
    parse_scenario,
    read_ket_file,
    read_scenario_file,
    render_document,
    scenario_to_json,
    scheme_document,
    write_scenario_file,
    write_scheme,
)
from .cli import cli_main

__version__ = "0.1.0"

__all__ = [
    "MAX_DIMENSION",
    "ORTHO_TOL",
    "PRODUCT_FAMILIES",
    "SCENARIO_NAMES",
    "ComparisonReport",
    "DiagonalHamiltonian",
    "HamiltonianTerm",
    "Ket",
    "ProjectorProduct",
    "Scenario",
    "SchemeDocument",
    "WeakValueTensor",
    "apply_pauli_string",
    "apply_projector_product",
    "basis_label",
    "basis_state",
    "basis_to_cell",
    "bell",
    "build_hamiltonian",
    "build_named",
    "cell_to_basis",
    "check_dims",
    "cheshire",
    "cli_main",
    "compare_states",
    "custom",
    "diagonal_cells",
    "document_to_json",
    "epr_pair",
    "evolve",
    "exact_counterpart",
    "expectation_tensor",
    "flat_index",
    "ghz",
    "ghz3_selected",
    "ghz_ket",
    "hardy",
    "hardy_gamma",
    "hardy_overlap_labels",
    "inner",
    "is_diagonal_supported",
    "make_ket",
    "marginalize",
    "multiwise_epr_hamiltonian",
    "multiwise_ghz_hamiltonian",
    "norm",
    "normalize",
    "paired_epr_hamiltonian",
    "parse_scenario",
    "phase_report",
    "product_form",
    "read_ket_file",
    "read_scenario_file",
    "render_cube",
    "render_document",
    "render_grid",
    "render_svg",
    "scenario_to_json",
    "scheme_document",
    "selection_overlap",
    "stabilizer_eigenvalue",
    "tensor_product",
    "total_dim",
    "total_sum",
    "weak_tensor",
    "weak_value",
    "weak_value_observable",
    "write_scenario_file",
    "write_scheme",
    # errors
    "WeakTensorError",
    "DimensionOverflowError",
    "DuplicateSubsystemError",
    "InvalidCountError",
    "LabelMismatchError",
    "LengthMismatchError",
    "LevelOutOfRangeError",
    "MissingParamError",
    "NonFiniteAmplitudeError",
    "NonQubitShapeError",
    "NonUniformShapeError",
    "NotThreeAxesError",
    "NotTwoAxesError",
    "OrthogonalSelectionError",
    "OutOfRangeError",
    "ParseError",
    "SchemaViolationError",
    "ShapeMismatchError",
    "SubsystemOutOfRangeError",
    "UnknownFamilyError",
    "UnsupportedRankError",
    "WrongScenarioError",
    "ZeroVectorError",
]
