"""Finite-model engine for emergent subsystems of reversible process theories."""

from .errors import (
    DegreeMismatch,
    ElementNotInGroup,
    ElementNotInOwner,
    GeneralCaseUnsupported,
    IncompatibleSystems,
    InvalidTheory,
    NotCentreless,
    NotFaithful,
    NotNested,
    NotOrthogonal,
    NotProductState,
    NotPure,
    NotSelfBicommutant,
    NotTransitive,
    ParseError,
    PointOutOfRange,
    PreconditionUnmet,
    ResourceLimit,
    StateNotInPair,
    StateNotInSystem,
    SubgroupNotInTheory,
    TheoryError,
    TypeMismatch,
    ZeroDimension,
)
from .perms import (
    FiniteGroup,
    GlobalTheory,
    Perm,
    Subgroup,
    centralizer,
    centre,
    direct_product_action,
    generate_group,
    stabilizer,
    subgroup_closure,
    theory_violations,
    validate_global_theory,
)
from .lattice import (
    SbcLattice,
    bicommutant,
    check_orthomodular,
    commutant,
    enumerate_self_bicommutant,
    is_orthocomplemented,
    is_orthocomplementary,
    is_orthogonal,
    is_self_bicommutant,
    join,
    meet,
    product_set,
    relative_commutant,
    tensor_element,
)
from .states import (
    LocalState,
    PurityVerdict,
    act_local,
    factorizes,
    is_product_state,
    iterated_restrict,
    local_orbit,
    pure_local_states,
    pure_stabilizer,
    restrict,
)
from .systems import (
    AssociativityReport,
    System,
    are_compatible,
    check_associativity_triple,
    enumerate_systems,
    make_system,
    tensor_pure_states,
    tensor_state_candidates,
    tensor_systems,
    trivial_system,
)
from .processes import (
    GenerationReport,
    MorphismClass,
    PairState,
    Process,
    ProcessCategory,
    PureProcess,
    SystemEnvironmentPair,
    apply_process,
    apply_pure,
    build_process_category,
    compose_process,
    compose_pure,
    discard_process,
    enumerate_generalised_effects,
    identity_process,
    identity_pure,
    make_pair,
    make_pair_state,
    make_process,
    make_pure_process,
    pair_composite,
    pair_states,
    process_codomain,
    process_state_map,
    pure_codomain,
    pure_preparation,
    pure_state_map,
    tensor_processes,
    tensor_pure_processes,
    verify_generation,
)
from .pmcat import (
    FiniteCategoryInstance,
    Violation,
    check_partially_monoidal,
    extract_instance,
)
from .catalog import (
    load_theory,
    named_theories,
    symmetric_group,
    theory_from_dict,
    theory_s3,
    theory_s3_cubed,
    theory_s3_diagonal_cosets,
    theory_s3_squared,
    theory_s4,
    theory_to_dict,
)
from .sectors import (
    SectorDecomposition,
    SpecialPairReport,
    centre_rank,
    check_special_pair_claims,
    classify,
    commutant_decomp,
    group_dimension,
    make_decomposition,
    parse_decomposition,
    system_count,
)
from .checks import SuiteResult, run_suites

__version__ = "0.1.0"
