"""Orientation covering numbers via maximal intersecting families.

Public surface: the graph model and parsers, set-family algebra and
enumeration, sigma computations, cover construction/verification with
JSON certificates, and brute-force oracles for small instances.
"""

from ._kernel import BACKEND as KERNEL_BACKEND
from .cover import (
    AssignmentViolation,
    CertificateMeta,
    CoverCertificate,
    FamilyAssignment,
    certificate_from_json,
    certificate_to_json,
    construct_cover,
    cover_from_families,
    families_from_cover,
    validate_assignment,
    verify_cover,
)
from .errors import BudgetError, CapacityError, ParseError
from .families import (
    KMAX_HARD,
    LITERATURE_LAMBDA,
    MifCatalog,
    SetFamily,
    enumerate_mifs,
    extend_to_maximal,
    find_disjoint_pair,
    hosten_morris,
    is_intersecting,
    is_maximal_intersecting,
    sorted_mif_masks,
    upward_closure,
)
from .graphs import (
    Coloring,
    Graph,
    Orientation,
    chromatic_number,
    complete_graph,
    cycle_graph,
    encode_graph6,
    parse_edge_list,
    parse_graph6,
    path_graph,
    petersen_graph,
    proper_coloring,
    wheel_graph,
)
from .oracle import SearchBudget, brute_chromatic, brute_mifs, brute_sigma
from .sigma import (
    EstimateResult,
    SigmaResult,
    lambda_asymptote,
    sigma_complete,
    sigma_estimate,
    sigma_of_graph,
)

__version__ = "0.1.0"

__all__ = [
    "AssignmentViolation",
    "BudgetError",
    "CapacityError",
    "CertificateMeta",
    "Coloring",
    "CoverCertificate",
    "EstimateResult",
    "FamilyAssignment",
    "Graph",
    "KERNEL_BACKEND",
    "KMAX_HARD",
    "LITERATURE_LAMBDA",
    "MifCatalog",
    "Orientation",
    "ParseError",
    "SearchBudget",
    "SetFamily",
    "SigmaResult",
    "brute_chromatic",
    "brute_mifs",
    "brute_sigma",
    "certificate_from_json",
    "certificate_to_json",
    "chromatic_number",
    "complete_graph",
    "construct_cover",
    "cover_from_families",
    "cycle_graph",
    "encode_graph6",
    "enumerate_mifs",
    "extend_to_maximal",
    "families_from_cover",
    "find_disjoint_pair",
    "hosten_morris",
    "is_intersecting",
    "is_maximal_intersecting",
    "lambda_asymptote",
    "parse_edge_list",
    "parse_graph6",
    "path_graph",
    "petersen_graph",
    "proper_coloring",
    "sigma_complete",
    "sigma_estimate",
    "sigma_of_graph",
    "sorted_mif_masks",
    "upward_closure",
    "validate_assignment",
    "verify_cover",
    "wheel_graph",
]
