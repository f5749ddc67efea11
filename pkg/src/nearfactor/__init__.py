"""Near-factor-critical graph recognition and matching tools."""

from .criticality import (
    CaseTag,
    CriticalityVerdict,
    TutteWitness,
    check_lemma1,
    check_near_factor,
    check_perfect_matching,
    is_factor_critical,
    is_nfc_by_definition,
    is_nfc_by_theorem,
    recheck,
    tutte_witness,
)
from .graph import (
    ComponentDecomposition,
    Graph,
    GraphError,
    GraphFormatError,
    components,
    count_odd_components,
    delete_vertices,
    disjoint_union,
    generate,
    parse_graph,
    random_graph,
    serialize_graph,
)
from .harness import VerificationReport, enumerate_labeled_graphs, verify_theorems
from .matching import (
    Matching,
    NearFactor,
    find_near_factor,
    has_perfect_matching,
    max_matching,
    unsaturated_vertices,
)

__version__ = "0.1.0"

__all__ = [
    "CaseTag",
    "ComponentDecomposition",
    "CriticalityVerdict",
    "Graph",
    "GraphError",
    "GraphFormatError",
    "Matching",
    "NearFactor",
    "TutteWitness",
    "VerificationReport",
    "check_lemma1",
    "check_near_factor",
    "check_perfect_matching",
    "components",
    "count_odd_components",
    "delete_vertices",
    "disjoint_union",
    "enumerate_labeled_graphs",
    "find_near_factor",
    "generate",
    "has_perfect_matching",
    "is_factor_critical",
    "is_nfc_by_definition",
    "is_nfc_by_theorem",
    "max_matching",
    "parse_graph",
    "random_graph",
    "recheck",
    "serialize_graph",
    "tutte_witness",
    "unsaturated_vertices",
    "verify_theorems",
]
