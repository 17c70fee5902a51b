"""Invariant Basis Number certificates for Cohn and Leavitt path algebras.

The package models finite directed graphs, their graph monoids, and the
companion constructions that turn questions about relative Cohn path
algebras into questions about Leavitt path algebras.  It decides IBN by
solving an exact rational weight system and, when no certificate exists,
by a bounded confluence search for a scalar-collapse witness.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .errors import (
    CohnIbnError,
    DanglingEdgeError,
    DuplicateNameError,
    EmptyGraphError,
    GraphError,
    GraphParseError,
    InternalInvariantViolation,
    LengthMismatchError,
    NonTerminatingError,
    NotRegularError,
    OutOfRangeError,
    UnknownExampleError,
    ZeroElementError,
)
from .graphs import (
    Edge,
    Graph,
    IncidenceMatrix,
    VertexClassification,
    classify,
    graph_from,
    incidence,
    validate,
)
from .construct import (
    PRIME,
    CompanionGraph,
    cohn_companion,
    companion_incidence,
    family,
    relative_companion,
)
from .rewriting import (
    DEFAULT_MAX_M,
    EQUIVALENT,
    NOT_EQUIVALENT,
    UNKNOWN,
    Closure,
    EquivalenceOutcome,
    ReductionTrace,
    RewriteSystem,
    ScalarWitness,
    SearchBounds,
    as_vector,
    cohn_presentation,
    decide_equivalent,
    find_scalar_witness,
    forward_closure,
    monoid_presentation,
    normal_form,
    one_step,
    scale,
)
from .certificates import (
    CertificateSystem,
    WeightCertificate,
    build_system,
    companion_rank_check,
    gamma,
    parse_weights,
    rational_rank,
    serialize_weights,
    solve_exact,
    verify_certificate,
)
from .decision import (
    IBN_CERTIFIED,
    IBN_REFUTED,
    IBN_UNKNOWN,
    IMN_HOLDS,
    IMN_UNKNOWN,
    KIND_COHN,
    KIND_LEAVITT,
    KIND_RELATIVE,
    AlgebraSpec,
    Verdict,
    audit,
    decide_ibn,
    decide_imn,
    resolve_target,
)
from .graphio import (
    emit_graph_json,
    emit_graph_text,
    graph_as_dict,
    parse_graph,
    parse_graph_json,
    parse_graph_text,
)
from .fixtures import (
    describe_examples,
    example_names,
    f_line_graph,
    f_rose_two,
    line_graph,
    load_example,
    rose_two,
)

__all__ = [
    "__version__",
    # errors
    "CohnIbnError", "GraphError", "DuplicateNameError", "DanglingEdgeError",
    "EmptyGraphError", "NotRegularError", "OutOfRangeError",
    "LengthMismatchError", "ZeroElementError", "NonTerminatingError",
    "InternalInvariantViolation", "GraphParseError", "UnknownExampleError",
    # graphs
    "Edge", "Graph", "VertexClassification", "IncidenceMatrix",
    "graph_from", "validate", "classify", "incidence",
    # constructions
    "PRIME", "CompanionGraph", "cohn_companion", "relative_companion",
    "companion_incidence", "family",
    # rewriting
    "DEFAULT_MAX_M", "EQUIVALENT", "NOT_EQUIVALENT", "UNKNOWN",
    "RewriteSystem", "SearchBounds", "ReductionTrace", "Closure",
    "EquivalenceOutcome", "ScalarWitness", "as_vector", "scale",
    "monoid_presentation", "cohn_presentation", "one_step",
    "forward_closure", "decide_equivalent", "normal_form",
    "find_scalar_witness",
    # certificates
    "CertificateSystem", "WeightCertificate", "build_system", "solve_exact",
    "rational_rank", "gamma", "verify_certificate", "companion_rank_check",
    "serialize_weights", "parse_weights",
    # decision
    "KIND_COHN", "KIND_RELATIVE", "KIND_LEAVITT",
    "IBN_CERTIFIED", "IBN_REFUTED", "IBN_UNKNOWN", "IMN_HOLDS", "IMN_UNKNOWN",
    "AlgebraSpec", "Verdict", "resolve_target", "decide_ibn", "decide_imn",
    "audit",
    # io
    "parse_graph", "parse_graph_text", "parse_graph_json",
    "emit_graph_text", "emit_graph_json", "graph_as_dict",
    # fixtures
    "line_graph", "rose_two", "f_rose_two", "f_line_graph",
    "example_names", "describe_examples", "load_example",
]
