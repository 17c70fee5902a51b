"""IBN/IMN verdicts for Cohn, relative Cohn, and Leavitt path algebras.

Each algebra kind reduces to a single target graph: the full companion
for a Cohn algebra, the relative companion for a relative one, the graph
itself for a Leavitt algebra.  IBN of the algebra is then IBN of the
target's Leavitt path algebra, decided on the target's graph monoid:
a verified weight certificate certifies it, a replayable scalar witness
on the all-ones vector refutes it, and exhausted bounds leave it open.
Verdicts always carry their evidence, and audit() re-checks that
evidence from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .certificates import (
    WeightCertificate,
    build_system,
    solve_exact,
    verify_certificate,
)
from .construct import cohn_companion, relative_companion
from .errors import InternalInvariantViolation
from .graphs import Graph, incidence, validate
from .rewriting import (
    DEFAULT_MAX_M,
    ReductionTrace,
    RewriteSystem,
    ScalarWitness,
    SearchBounds,
    find_scalar_witness,
    monoid_presentation,
    scale,
)

KIND_COHN = "cohn"
KIND_RELATIVE = "relative"
KIND_LEAVITT = "leavitt"

IBN_CERTIFIED = "certified"
IBN_REFUTED = "refuted"
IBN_UNKNOWN = "unknown"

IMN_HOLDS = "holds"
IMN_UNKNOWN = "unknown"


@dataclass(frozen=True)
class AlgebraSpec:
    """Which algebra over which graph; x only applies to the relative kind."""

    kind: str
    graph: Graph
    x: tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind not in (KIND_COHN, KIND_RELATIVE, KIND_LEAVITT):
            raise ValueError(f"unknown algebra kind {self.kind!r}")
        if self.kind != KIND_RELATIVE and self.x:
            raise ValueError(f"x is only meaningful for kind={KIND_RELATIVE!r}")
        object.__setattr__(self, "x", tuple(self.x))


@dataclass(frozen=True)
class Verdict:
    target: Graph
    generators: tuple[str, ...]
    ibn: str
    imn: str
    certificate: WeightCertificate | None
    witness: ScalarWitness | None
    bounds: SearchBounds
    max_m: int
    route: str
    notes: tuple[str, ...]


def resolve_target(spec: AlgebraSpec) -> Graph:
    """The graph whose Leavitt path algebra realizes the requested algebra."""
    graph = validate(spec.graph)
    if spec.kind == KIND_COHN:
        return cohn_companion(graph).graph
    if spec.kind == KIND_RELATIVE:
        return relative_companion(graph, spec.x).graph
    return graph


def decide_ibn(
    spec: AlgebraSpec,
    bounds: SearchBounds | None = None,
    max_m: int = DEFAULT_MAX_M,
) -> Verdict:
    """Decide IBN for the algebra: certificate first, then witness search.

    The certificate route is complete for the Cohn kind, so failure there
    raises InternalInvariantViolation rather than producing a verdict.
    The returned verdict leaves imn unresolved; see decide_imn.
    """
    bounds = bounds or SearchBounds()
    target = resolve_target(spec)
    matrix = incidence(target)
    rs = monoid_presentation(matrix)
    notes: list[str] = [
        f"target graph: {len(target.vertices)} vertices, {len(target.edges)} edges",
        f"presentation: {rs.num_generators} generators, {rs.num_rules} rules",
    ]

    cert = solve_exact(build_system(matrix))
    if cert is not None:
        if not verify_certificate(cert, rs):
            raise InternalInvariantViolation(
                "solved weight system failed verification"
            )
        notes.append("weight system solved; certificate verified")
        return Verdict(
            target=target,
            generators=rs.generators,
            ibn=IBN_CERTIFIED,
            imn=IMN_UNKNOWN,
            certificate=cert,
            witness=None,
            bounds=bounds,
            max_m=max_m,
            route="certificate",
            notes=tuple(notes),
        )

    notes.append("weight system inconsistent; no certificate exists")
    if spec.kind == KIND_COHN:
        raise InternalInvariantViolation(
            "certificate construction failed for a Cohn algebra; this "
            "cannot happen for a correct companion construction"
        )

    rho = (1,) * rs.num_generators
    witness = find_scalar_witness(rho, rs, max_m, bounds)
    if witness is not None:
        notes.append(
            f"witness search: {witness.m}*rho ~ {witness.m_prime}*rho "
            f"with common descendant"
        )
        return Verdict(
            target=target,
            generators=rs.generators,
            ibn=IBN_REFUTED,
            imn=IMN_UNKNOWN,
            certificate=None,
            witness=witness,
            bounds=bounds,
            max_m=max_m,
            route="witness-search",
            notes=tuple(notes),
        )

    notes.append(f"witness search exhausted all pairs up to max_m={max_m}")
    return Verdict(
        target=target,
        generators=rs.generators,
        ibn=IBN_UNKNOWN,
        imn=IMN_UNKNOWN,
        certificate=None,
        witness=None,
        bounds=bounds,
        max_m=max_m,
        route="exhausted",
        notes=tuple(notes),
    )


def decide_imn(verdict: Verdict) -> Verdict:
    """Fill the IMN field.

    A certificate forces the class of the algebra to have infinite order
    in K-theory, which is exactly what Invariant Matrix Number needs; no
    inference is available in the refuted or unknown cases.
    """
    imn = IMN_HOLDS if verdict.ibn == IBN_CERTIFIED else IMN_UNKNOWN
    return replace(verdict, imn=imn)


def _replay_ok(trace: ReductionTrace, rs: RewriteSystem, expected_end) -> bool:
    try:
        return trace.replay(rs) == tuple(expected_end)
    except ValueError:
        return False


def audit(verdict: Verdict, spec: AlgebraSpec) -> bool:
    """Re-verify a verdict's evidence independently of how it was produced."""
    try:
        target = resolve_target(spec)
    except Exception:
        return False
    if target != verdict.target:
        return False
    rs = monoid_presentation(incidence(target))
    if rs.generators != verdict.generators:
        return False
    if verdict.imn == IMN_HOLDS and verdict.ibn != IBN_CERTIFIED:
        return False

    if verdict.ibn == IBN_CERTIFIED:
        return verdict.certificate is not None and verify_certificate(
            verdict.certificate, rs
        )
    if verdict.ibn == IBN_REFUTED:
        w = verdict.witness
        if w is None or not (0 < w.m < w.m_prime):
            return False
        rho = (1,) * rs.num_generators
        if w.base != rho:
            return False
        if w.trace_a.start != scale(rho, w.m):
            return False
        if w.trace_b.start != scale(rho, w.m_prime):
            return False
        return _replay_ok(w.trace_a, rs, w.descendant) and _replay_ok(
            w.trace_b, rs, w.descendant
        )
    return verdict.certificate is None and verdict.witness is None
