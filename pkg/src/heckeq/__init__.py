"""heckeq: exact computational toolkit for Hecke-algebra representation data.

The package computes, in exact rational and Laurent-polynomial
arithmetic: eigenvalues of the fundamental invariant of the Hecke
algebra and their inversion back to Young diagrams, symmetric-group
central characters and full character tables via central projectors,
Murphy-operator trace tables and connected-word traces, and the
quadratic Casimir spectra of quantum unitary groups together with their
correspondence to the Hecke side.  A regular-representation oracle at a
specialized rational q0 cross-validates everything.
"""

from .laurent import (
    DeltaSeries,
    LaurentPoly,
    NotDivisible,
    PolynomialParseError,
    ZeroSpecialization,
    exp_series,
    q_content,
    q_integer,
    symmetric_bracket,
)
from .diagrams import TableauPath, YoungDiagram, dimension, partitions, paths
from .invariant import (
    CentralCharacterTable,
    InvalidSpectrum,
    NonIntegerPowerSum,
    UnsupportedCycle,
    central_character,
    central_character_table,
    content_power_sum,
    invariant_eigenvalue,
    power_sums_from_eigenvalue,
    reconstruct_diagram,
    rescaled_invariant_eigenvalue,
    separating_depth,
)
from .symgroup import (
    ClassVector,
    NonIntegerCharacter,
    NotSeparated,
    build_projector,
    character_table,
    character_table_json,
    characters_from_projector,
    class_product,
    class_size,
    conjugacy_classes,
    cycle_type,
    murnaghan_nakayama_character,
    single_cycle_class_sum,
)
from .hecke_oracle import (
    DegenerateSpecialization,
    HeckeElement,
    ProjectorPoly,
    apply_projector,
    fundamental_invariant,
    hecke_projector,
    irreducible_trace,
    murphy_element,
    projector_element,
    regular_trace,
    word_element,
)
from .traces import (
    MurphyTraceTable,
    doubly_connected_traces,
    invariant_trace_consistency,
    murphy_product_trace,
    murphy_trace_table_json,
    murphy_traces,
    simply_connected_trace,
)
from .suq import (
    GZPattern,
    PatternViolation,
    SuqIrrep,
    casimir_eigenvalue,
    check_ef_commutator,
    chevalley_weight,
    gz_patterns,
    hecke_casimir_correspondence,
    irrep_from_casimir,
    lowering_squared,
)

__version__ = "0.1.0"

__all__ = [
    "DeltaSeries",
    "LaurentPoly",
    "NotDivisible",
    "PolynomialParseError",
    "ZeroSpecialization",
    "exp_series",
    "q_content",
    "q_integer",
    "symmetric_bracket",
    "TableauPath",
    "YoungDiagram",
    "dimension",
    "partitions",
    "paths",
    "CentralCharacterTable",
    "InvalidSpectrum",
    "NonIntegerPowerSum",
    "UnsupportedCycle",
    "central_character",
    "central_character_table",
    "content_power_sum",
    "invariant_eigenvalue",
    "power_sums_from_eigenvalue",
    "reconstruct_diagram",
    "rescaled_invariant_eigenvalue",
    "separating_depth",
    "ClassVector",
    "NonIntegerCharacter",
    "NotSeparated",
    "build_projector",
    "character_table",
    "character_table_json",
    "characters_from_projector",
    "class_product",
    "class_size",
    "conjugacy_classes",
    "cycle_type",
    "murnaghan_nakayama_character",
    "single_cycle_class_sum",
    "DegenerateSpecialization",
    "HeckeElement",
    "ProjectorPoly",
    "apply_projector",
    "fundamental_invariant",
    "hecke_projector",
    "irreducible_trace",
    "murphy_element",
    "projector_element",
    "regular_trace",
    "word_element",
    "MurphyTraceTable",
    "doubly_connected_traces",
    "invariant_trace_consistency",
    "murphy_product_trace",
    "murphy_trace_table_json",
    "murphy_traces",
    "simply_connected_trace",
    "GZPattern",
    "PatternViolation",
    "SuqIrrep",
    "casimir_eigenvalue",
    "check_ef_commutator",
    "chevalley_weight",
    "gz_patterns",
    "hecke_casimir_correspondence",
    "irrep_from_casimir",
    "lowering_squared",
]
