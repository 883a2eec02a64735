"""Ground states of the Potts model with competing nearest- and
next-nearest-neighbor interactions on the order-3 Cayley tree.

Vertices are reduced words over four involutive generators; a configuration
assigns a nonnegative integer spin to each vertex.  The package classifies
unit balls into the twelve energy classes, computes the exact coupling-plane
fan of minimizing classes, constructs the periodic and weakly periodic
families, and verifies every finitely checkable claim about them.
"""

from .energy import (
    Ball,
    Coupling,
    NUM_CLASSES,
    ball_at,
    ball_energy,
    class_coefficients,
    class_energy,
    class_of,
    coupling,
    finite_volume_energy,
    parse_coupling,
    parse_rational,
    relative_energy,
    relative_energy_by_balls,
    signature,
)
from .errors import (
    BoundaryViolationError,
    CayleyPottsError,
    DegenerateSubsetError,
    DomainError,
    InfeasibleSignatureError,
    InvalidGeneratorError,
    InvalidParamsError,
    InvalidSubsetError,
    NonReducedWordError,
    OracleMismatchError,
    RadiusCapError,
    UnknownNameError,
)
from .families import (
    Config,
    all_distinct,
    dump_config,
    from_mapping,
    load_config,
    parity2,
    parse_family,
    phi6,
    phi7,
    phi8,
    phi9,
    phi10,
    phi11,
    phi12,
    psi7,
    random_config,
    translate,
    translation_invariant,
    with_flips,
    xi7,
)
from .kernels import BACKEND, available_backends, census_classes
from .phases import (
    Fan,
    Sector,
    compute_fan,
    fan_to_jsonable,
    minimizing_classes,
    region_comparison_report,
    theorem2_sets,
)
from .verify import (
    BallCensus,
    GroundVerdict,
    PeriodicityReport,
    census,
    check_periodic,
    check_weakly_periodic,
    is_ground_state,
    theorem1_report,
    theorem2_report,
)
from .words import (
    GENERATORS,
    ball_size,
    ball_vertices,
    canonical_index,
    distance,
    format_word,
    inverse,
    multiply,
    neighbors,
    parent,
    parse_word,
    reduce_word,
    sphere,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Ball",
    "BallCensus",
    "BoundaryViolationError",
    "CayleyPottsError",
    "Config",
    "Coupling",
    "DegenerateSubsetError",
    "DomainError",
    "Fan",
    "GENERATORS",
    "GroundVerdict",
    "InfeasibleSignatureError",
    "InvalidGeneratorError",
    "InvalidParamsError",
    "InvalidSubsetError",
    "NUM_CLASSES",
    "NonReducedWordError",
    "OracleMismatchError",
    "PeriodicityReport",
    "RadiusCapError",
    "Sector",
    "UnknownNameError",
    "all_distinct",
    "available_backends",
    "ball_at",
    "ball_energy",
    "ball_size",
    "ball_vertices",
    "canonical_index",
    "census",
    "census_classes",
    "check_periodic",
    "check_weakly_periodic",
    "class_coefficients",
    "class_energy",
    "class_of",
    "compute_fan",
    "coupling",
    "distance",
    "dump_config",
    "fan_to_jsonable",
    "finite_volume_energy",
    "format_word",
    "from_mapping",
    "inverse",
    "is_ground_state",
    "load_config",
    "minimizing_classes",
    "multiply",
    "neighbors",
    "parent",
    "parity2",
    "parse_coupling",
    "parse_family",
    "parse_rational",
    "parse_word",
    "phi6",
    "phi7",
    "phi8",
    "phi9",
    "phi10",
    "phi11",
    "phi12",
    "psi7",
    "random_config",
    "reduce_word",
    "region_comparison_report",
    "relative_energy",
    "relative_energy_by_balls",
    "signature",
    "sphere",
    "theorem1_report",
    "theorem2_report",
    "theorem2_sets",
    "translate",
    "translation_invariant",
    "with_flips",
    "xi7",
]
