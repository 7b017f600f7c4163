"""deltakit: factorization invariants of numerical semigroups.

Length sets, delta sets, Betti elements, minimal presentations, structure
of embedding dimension 3, explicit families with predicted invariants, and
exhaustive searches with a persistent catalog.
"""
from __future__ import annotations

from .acceptance import AcceptanceReport, CriterionResult, run_all
from .catalog import (
    CatalogRecord,
    CatalogWriter,
    catalog_append,
    read_catalog,
    record_for,
    record_line,
)
from .core import GapProfile, NumericalSemigroup, construct
from .embdim3 import (
    Ed3DeltaClassification,
    Ed3DeltaKind,
    Ed3Invariants,
    SymmetricDecomposition,
    all_symmetric_decompositions,
    classify_two_element_delta,
    ed3_invariants,
    nonsymmetric_presentation,
    single_delta_criterion,
    symmetric_decomposition,
    symmetric_key_length_set,
    symmetric_presentation,
)
from .errors import (
    BadParameters,
    BadPrime,
    ContainsZero,
    DecompositionNotFound,
    DegenerateParameters,
    DeltakitError,
    DividesD,
    EmbeddingDimensionOne,
    EmptyInput,
    ExcludedParameters,
    GcdNotOne,
    GcdViolation,
    InvalidRelation,
    IoFailure,
    NegativeInput,
    NotAMember,
    NotSymmetric,
    PartialScanRejected,
    SymmetricSemigroup,
    TooManyFactorizations,
    UnrealizableByGcdTest,
    UnrealizableLengthOne,
    WholeNumbersSemigroup,
    WrongEmbeddingDimension,
)
from .factorizations import (
    DeltaScanResult,
    delta_bound,
    delta_of_element,
    delta_of_length_bits,
    delta_semigroup,
    factorizations_of,
    iter_length_bitsets,
    length_of,
    length_set,
    support_of,
)
from .families import (
    FamilyId,
    FamilyInstance,
    FamilyPredictions,
    FamilyReport,
    FiberCheck,
    PredictionCheck,
    StatedFormReport,
    build_family,
    family_arith48,
    family_complete_intersection,
    family_con3a,
    family_con3b,
    family_con3c,
    family_con3d,
    family_conjecture,
    family_gap49,
    family_minpres,
    family_power,
    family_symmetric_d,
    parse_family_id,
    stated_form_report,
    verify_family,
)
from .presentations import (
    BettiRecord,
    BettiScan,
    PresentationRelation,
    RClassPartition,
    betti_elements,
    is_uniquely_presented,
    minimal_presentation,
    r_classes,
    verify_presentation,
)
from .search import (
    SearchMode,
    SearchQuery,
    SearchResult,
    TargetKind,
    Witness,
    enumerate_semigroups,
    open_target_queries,
    parse_target_kind,
    realize,
)

__version__ = "0.1.0"

__all__ = [
    # core
    "GapProfile",
    "NumericalSemigroup",
    "construct",
    # factorizations
    "DeltaScanResult",
    "delta_bound",
    "delta_of_element",
    "delta_of_length_bits",
    "delta_semigroup",
    "factorizations_of",
    "iter_length_bitsets",
    "length_of",
    "length_set",
    "support_of",
    # presentations
    "BettiRecord",
    "BettiScan",
    "PresentationRelation",
    "RClassPartition",
    "betti_elements",
    "is_uniquely_presented",
    "minimal_presentation",
    "r_classes",
    "verify_presentation",
    # embedding dimension 3
    "Ed3DeltaClassification",
    "Ed3DeltaKind",
    "Ed3Invariants",
    "SymmetricDecomposition",
    "all_symmetric_decompositions",
    "classify_two_element_delta",
    "ed3_invariants",
    "nonsymmetric_presentation",
    "single_delta_criterion",
    "symmetric_decomposition",
    "symmetric_key_length_set",
    "symmetric_presentation",
    # families
    "FamilyId",
    "FamilyInstance",
    "FamilyPredictions",
    "FamilyReport",
    "FiberCheck",
    "PredictionCheck",
    "StatedFormReport",
    "build_family",
    "family_arith48",
    "family_complete_intersection",
    "family_con3a",
    "family_con3b",
    "family_con3c",
    "family_con3d",
    "family_conjecture",
    "family_gap49",
    "family_minpres",
    "family_power",
    "family_symmetric_d",
    "parse_family_id",
    "stated_form_report",
    "verify_family",
    # search and catalog
    "SearchMode",
    "SearchQuery",
    "SearchResult",
    "TargetKind",
    "Witness",
    "enumerate_semigroups",
    "open_target_queries",
    "parse_target_kind",
    "realize",
    "CatalogRecord",
    "CatalogWriter",
    "catalog_append",
    "read_catalog",
    "record_for",
    "record_line",
    # acceptance
    "AcceptanceReport",
    "CriterionResult",
    "run_all",
    # errors
    "DeltakitError",
    "EmptyInput",
    "ContainsZero",
    "NegativeInput",
    "GcdNotOne",
    "NotAMember",
    "WholeNumbersSemigroup",
    "EmbeddingDimensionOne",
    "TooManyFactorizations",
    "InvalidRelation",
    "WrongEmbeddingDimension",
    "SymmetricSemigroup",
    "NotSymmetric",
    "DecompositionNotFound",
    "ExcludedParameters",
    "GcdViolation",
    "BadPrime",
    "DividesD",
    "DegenerateParameters",
    "BadParameters",
    "UnrealizableByGcdTest",
    "UnrealizableLengthOne",
    "IoFailure",
    "PartialScanRejected",
    "__version__",
]
