"""Minimal free resolutions of square-free monomial ideals.

Betti tables via Taylor-subcomplex homology, lcm lattices, well ordered
covers with split certificates, strongly disjoint bouquet families, and
subadditivity reports, plus a CLI wrapping all of it.
"""

from .analysis import (
    SubadditivityReport,
    TopDegreeCheck,
    search_complement_witnesses,
    top_degree_check,
    verify_subadditivity,
)
from .betti import (
    BettiTable,
    betti_table,
    format_betti_json,
    format_betti_m2,
    multigraded_betti,
    parse_betti_m2,
    t_max,
)
from .bouquets import (
    Bouquet,
    BouquetCheck,
    BouquetSet,
    BouquetSubadditivity,
    bouquet_orderings,
    bouquet_subadditivity,
    build_bouquet_set,
    contains_strongly_disjoint_set,
    facet_distance,
    is_bouquet,
    is_strongly_disjoint,
    outside_condition,
    representative_systems,
    spans_complex,
)
from .core import (
    EMPTY_IDEAL,
    MonomialIdeal,
    SimplicialComplex,
    SqfMonomial,
    VariableTable,
    facet_complex,
    facet_ideal,
    format_ideal_json,
    format_ideal_text,
    format_monomial,
    free_vertices,
    induced_subideal,
    monomial_names,
    normalize_generators,
    parse_ideal,
    parse_ideal_json,
    parse_ideal_text,
    polarize,
    restrict_monomial,
)
from .covers import (
    Cover,
    SplitCertificate,
    WellOrderedCover,
    WocCheck,
    alpha_values,
    enumerate_minimal_covers,
    find_well_ordered_covers,
    is_minimal_cover,
    is_well_ordered_cover,
    rotate_cover,
    split_certificate,
)
from .errors import (
    EmptyInput,
    InvalidBouquetSet,
    InvalidPartition,
    InvalidSplit,
    NotAFacet,
    NotInLattice,
    NotWellOrdered,
    OutOfRange,
    ParseError,
    RotationOutOfRange,
    SameFacet,
    SizeLimitExceeded,
    SqfBettiError,
    TooManyVariables,
    UncoveredVariable,
)
from .homology import (
    GF_32003,
    RATIONALS,
    ChainComplexRanks,
    FaceSet,
    FieldSpec,
    boundary_matrix,
    matrix_rank,
    reduced_homology_ranks,
    taylor_faces_below,
)
from .lattice import (
    LcmLattice,
    build_lattice,
    enumerate_complements,
    hasse_pairs,
    is_lattice_complement,
)

__version__ = "0.1.0"

__all__ = [
    "BettiTable",
    "Bouquet",
    "BouquetCheck",
    "BouquetSet",
    "BouquetSubadditivity",
    "ChainComplexRanks",
    "Cover",
    "EMPTY_IDEAL",
    "EmptyInput",
    "FaceSet",
    "FieldSpec",
    "GF_32003",
    "InvalidBouquetSet",
    "InvalidPartition",
    "InvalidSplit",
    "LcmLattice",
    "MonomialIdeal",
    "NotAFacet",
    "NotInLattice",
    "NotWellOrdered",
    "OutOfRange",
    "ParseError",
    "RATIONALS",
    "RotationOutOfRange",
    "SameFacet",
    "SimplicialComplex",
    "SizeLimitExceeded",
    "SplitCertificate",
    "SqfBettiError",
    "SqfMonomial",
    "SubadditivityReport",
    "TooManyVariables",
    "TopDegreeCheck",
    "UncoveredVariable",
    "VariableTable",
    "WellOrderedCover",
    "WocCheck",
    "alpha_values",
    "betti_table",
    "boundary_matrix",
    "bouquet_orderings",
    "bouquet_subadditivity",
    "build_bouquet_set",
    "build_lattice",
    "contains_strongly_disjoint_set",
    "enumerate_complements",
    "enumerate_minimal_covers",
    "facet_complex",
    "facet_distance",
    "facet_ideal",
    "find_well_ordered_covers",
    "format_betti_json",
    "format_betti_m2",
    "format_ideal_json",
    "format_ideal_text",
    "format_monomial",
    "free_vertices",
    "hasse_pairs",
    "induced_subideal",
    "is_bouquet",
    "is_lattice_complement",
    "is_minimal_cover",
    "is_strongly_disjoint",
    "is_well_ordered_cover",
    "matrix_rank",
    "monomial_names",
    "multigraded_betti",
    "normalize_generators",
    "outside_condition",
    "parse_betti_m2",
    "parse_ideal",
    "parse_ideal_json",
    "parse_ideal_text",
    "polarize",
    "reduced_homology_ranks",
    "representative_systems",
    "restrict_monomial",
    "rotate_cover",
    "search_complement_witnesses",
    "spans_complex",
    "split_certificate",
    "t_max",
    "taylor_faces_below",
    "top_degree_check",
    "verify_subadditivity",
]
