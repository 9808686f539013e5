"""Entanglement-family classification of symmetric multiqubit states.

The package classifies projective symmetric states of N qubits by the ranks
of their catalecticant (Hankel) matrices: the border rank places a state in
its secant entanglement family, a square-free kernel search refines that
into proper-secant versus tangent classes with explicit Waring-decomposition
witnesses, local filters and success probabilities connect the classes
operationally, and reduced-density ranks turn the family index into the
interaction length of a verified parent Hamiltonian.
"""

from .binaryforms import (
    BinaryForm,
    ProjectiveRoot,
    binary_form,
    is_squarefree,
    projective_roots,
)
from .catalecticant import (
    Catalecticant,
    RankProfile,
    catalecticant,
    matrix_rank,
    rank_profile,
    secant_dim_estimate,
    secant_family,
)
from .errors import ArgumentError, DomainError, NumericalError, ResourceError
from .rdm import (
    MinimalityReport,
    ParentHamiltonian,
    ReducedDensity,
    interaction_length,
    minimality_check,
    parent_hamiltonian,
    rdm_rank_profile,
    reduced_density,
)
from .scalars import QQi, ModeError
from .slocc import (
    LocalOperator,
    MeasurementPair,
    SweepRow,
    asymptotic_sweep,
    ghz_to_w_operator,
    povm_from_operator,
    slocc_apply,
    success_probability,
    sym_power_operator,
)
from .states import (
    DecomposedState,
    LocalVector,
    SymState,
    chordal_distance,
    dicke_normalizer,
    expand_decomposition,
    fidelity,
    from_full_tensor,
    induced_dim,
    induced_norm_sq,
    is_separable,
    multi_indices,
    projective_equal,
    standard_state,
    to_full_tensor,
    veronese_map,
)
from .sylvester import (
    ClassificationReport,
    TangentCertificate,
    apolar_kernel,
    classify,
    nest,
    secant_point,
    squarefree_member,
    symmetric_rank,
    tangent_plane_point,
    tangent_point,
    tangent_point_tilde,
    waring_decomposition,
)

__version__ = "0.1.0"

__all__ = [
    "ArgumentError",
    "BinaryForm",
    "Catalecticant",
    "ClassificationReport",
    "DecomposedState",
    "DomainError",
    "LocalOperator",
    "LocalVector",
    "MeasurementPair",
    "MinimalityReport",
    "ModeError",
    "NumericalError",
    "ParentHamiltonian",
    "ProjectiveRoot",
    "QQi",
    "RankProfile",
    "ReducedDensity",
    "ResourceError",
    "SweepRow",
    "SymState",
    "TangentCertificate",
    "apolar_kernel",
    "asymptotic_sweep",
    "binary_form",
    "catalecticant",
    "chordal_distance",
    "classify",
    "dicke_normalizer",
    "expand_decomposition",
    "fidelity",
    "from_full_tensor",
    "ghz_to_w_operator",
    "induced_dim",
    "induced_norm_sq",
    "interaction_length",
    "is_separable",
    "is_squarefree",
    "matrix_rank",
    "minimality_check",
    "multi_indices",
    "nest",
    "parent_hamiltonian",
    "povm_from_operator",
    "projective_equal",
    "rank_profile",
    "rdm_rank_profile",
    "reduced_density",
    "secant_dim_estimate",
    "secant_family",
    "secant_point",
    "slocc_apply",
    "squarefree_member",
    "standard_state",
    "success_probability",
    "sym_power_operator",
    "symmetric_rank",
    "tangent_plane_point",
    "tangent_point",
    "tangent_point_tilde",
    "to_full_tensor",
    "veronese_map",
    "waring_decomposition",
]
