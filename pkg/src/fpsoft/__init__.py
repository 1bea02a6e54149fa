"""Exact-arithmetic fuzzy-parametrized soft set algebra, topology, and an
exhaustive small-instance law checker."""

from .model import (
    Context,
    ContextMismatchError,
    FuzzyParamSet,
    grade,
    same_context,
)
from .sets import (
    FPSoftPoint,
    FPSoftSet,
    a_universal_set,
    alpha_universal_set,
    complement,
    decompose_points,
    empty_set,
    equals,
    intersect_family,
    is_normalized,
    is_subset,
    make_special,
    normalize,
    point_belongs,
    point_qcoincident,
    qcoincident,
    union_family,
    universal_set,
)
from .mapping import FPSoftMapping, MappingKind, classify, image, preimage
from .topology import (
    AxiomViolation,
    FPSoftTopology,
    OperatorAxiomError,
    OperatorTable,
    TopologyAxiomError,
    check_axioms,
    closed_family,
    closure,
    closure_operator_of,
    enriched_for,
    indiscrete_topology,
    induce_from_closure_operator,
    induce_from_interior_operator,
    interior,
    interior_operator_of,
    is_base,
    is_continuous,
    is_qnbd,
    validate_topology,
)
from .compactness import (
    CompactnessReport,
    CoverFamily,
    FamilySizeError,
    check_compactness,
    greedy_subcover,
    has_fip,
    is_cover,
    minimal_subcover,
)
from .lattice import CarrierBoundError, LatticeSpec, make_context
from .laws import LawResult, UnknownLawError, all_law_ids, run_law_suite
from .docio import Document, ParseError, format_document, parse_document

__all__ = [name for name in dir() if not name.startswith("_")]
