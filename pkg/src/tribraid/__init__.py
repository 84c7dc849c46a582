"""Free 3-braid group words, exact collinearity-event compilation of strand
motions, realisability classification with bad-letter projection, and
annular braid reconstruction with linking invariants."""

from .errors import (
    AdjacencyViolation,
    AmbiguousCentral,
    BadTriple,
    ConstructionFailure,
    DegeneratePath,
    DimensionMismatch,
    GenericityError,
    InvalidMove,
    InvalidN,
    NotClosed,
    NotRealisable,
    ProgramParseError,
    TribraidError,
    UnsupportedN,
    WordParseError,
)
from .geometry import (
    CollinearityEvent,
    CompileOutput,
    Configuration,
    FullTwistMove,
    LinearMove,
    MoveProgram,
    RationalPoint,
    boundary_configurations,
    compile_program,
    concat_programs,
    configuration_state,
    embed_at_infinity,
    full_twist_program,
    geometric_linking,
    inverse_program,
    orientation,
    program_from_json,
    program_power,
    program_to_json,
    pure_braid_generator_program,
    random_closed_program,
    regular_rational_configuration,
    segment_events,
)
from .group_core import (
    EqualityVerdict,
    GenTriple,
    GWord,
    MoveKind,
    ParityVector,
    RelationMove,
    all_generators,
    applicable_moves,
    apply_move,
    bounded_equal,
    far_commutes,
    format_word,
    free_reduce,
    generator_parity,
    parse_indices,
    parse_word,
)
from .index_state import (
    CensusReport,
    CensusRow,
    ClassifiedWord,
    LetterStatus,
    OrientationState,
    all_triples,
    classify_word,
    enumerate_states,
    flip,
    initial_state,
    is_realisable,
    letter_status,
    project_once,
    relation_census,
    run_word,
    signed_index,
    stable_projection,
    state_from_id,
    state_id,
    tetra_letters,
)
from .reconstruction import (
    NONTRIVIAL_BY_LINKING,
    NONTRIVIAL_BY_PARITY,
    TRIVIAL_CONSISTENT,
    AnnularInvariants,
    CylLetter,
    CylWord,
    KernelVerdict,
    annular_invariants,
    empty_cyl_word,
    initial_cyclic_order,
    invariants_equal_mod_full_twist,
    kernel_witness,
    reconstruct_axis,
)

__version__ = "0.1.0"

__all__ = [
    "AdjacencyViolation",
    "AmbiguousCentral",
    "AnnularInvariants",
    "BadTriple",
    "CensusReport",
    "CensusRow",
    "ClassifiedWord",
    "CollinearityEvent",
    "CompileOutput",
    "Configuration",
    "ConstructionFailure",
    "CylLetter",
    "CylWord",
    "DegeneratePath",
    "DimensionMismatch",
    "EqualityVerdict",
    "FullTwistMove",
    "GWord",
    "GenTriple",
    "GenericityError",
    "InvalidMove",
    "InvalidN",
    "KernelVerdict",
    "LetterStatus",
    "LinearMove",
    "MoveKind",
    "MoveProgram",
    "NONTRIVIAL_BY_LINKING",
    "NONTRIVIAL_BY_PARITY",
    "NotClosed",
    "NotRealisable",
    "OrientationState",
    "ParityVector",
    "ProgramParseError",
    "RationalPoint",
    "RelationMove",
    "TRIVIAL_CONSISTENT",
    "TribraidError",
    "UnsupportedN",
    "WordParseError",
    "all_generators",
    "all_triples",
    "annular_invariants",
    "applicable_moves",
    "apply_move",
    "boundary_configurations",
    "bounded_equal",
    "classify_word",
    "compile_program",
    "concat_programs",
    "configuration_state",
    "embed_at_infinity",
    "empty_cyl_word",
    "enumerate_states",
    "far_commutes",
    "flip",
    "format_word",
    "free_reduce",
    "full_twist_program",
    "generator_parity",
    "geometric_linking",
    "initial_cyclic_order",
    "initial_state",
    "invariants_equal_mod_full_twist",
    "inverse_program",
    "is_realisable",
    "kernel_witness",
    "letter_status",
    "orientation",
    "parse_indices",
    "parse_word",
    "program_from_json",
    "program_power",
    "program_to_json",
    "project_once",
    "pure_braid_generator_program",
    "random_closed_program",
    "reconstruct_axis",
    "regular_rational_configuration",
    "relation_census",
    "run_word",
    "segment_events",
    "signed_index",
    "stable_projection",
    "state_from_id",
    "state_id",
    "tetra_letters",
]
