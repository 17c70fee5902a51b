"""Commutative-monoid presentations as vector rewrite systems.

A presentation lives on an ordered generator list; elements are vectors of
nonnegative integer coefficients.  Each rewritable generator i carries one
rule: remove a single unit at position i, add a fixed replacement vector.
Two nonzero elements are equal in the quotient monoid exactly when some
forward rewrites lead them to a common vector, which is what the bounded
breadth-first search below looks for.  A search can therefore prove
equality (with replayable traces) but can refute it only when both
reachability closures are complete, or when a weight functional separates
the two sides.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Sequence

import numpy as np

from ._kernels import expand_frontier
from .errors import (
    LengthMismatchError,
    NonTerminatingError,
    OutOfRangeError,
    ZeroElementError,
)
from .graphs import Graph, IncidenceMatrix, incidence

if TYPE_CHECKING:
    from .certificates import WeightCertificate

Vector = tuple[int, ...]

EQUIVALENT = "equivalent"
NOT_EQUIVALENT = "not-equivalent"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class RewriteSystem:
    """One-rule-per-generator commutative rewrite system.

    ``rule_index[k]`` is the generator rewritten by rule k and
    ``rule_add[k]`` its replacement vector (always nonzero).
    """

    generators: tuple[str, ...]
    rule_index: np.ndarray
    rule_add: np.ndarray

    def __post_init__(self):
        idx = np.ascontiguousarray(self.rule_index, dtype=np.int64)
        add = np.ascontiguousarray(self.rule_add, dtype=np.int64)
        if add.ndim != 2 or add.shape != (idx.shape[0], len(self.generators)):
            raise ValueError("rule arrays inconsistent with generator count")
        if len(set(idx.tolist())) != idx.shape[0]:
            raise ValueError("rule indices must be distinct")
        if idx.size and (idx.min() < 0 or idx.max() >= len(self.generators)):
            raise ValueError("rule index out of range")
        if idx.size and not (add.sum(axis=1) > 0).all():
            raise ValueError("replacement vectors must be nonzero")
        idx.setflags(write=False)
        add.setflags(write=False)
        object.__setattr__(self, "rule_index", idx)
        object.__setattr__(self, "rule_add", add)

    @property
    def num_generators(self) -> int:
        return len(self.generators)

    @property
    def num_rules(self) -> int:
        return int(self.rule_index.shape[0])

    def rules(self) -> Iterable[tuple[int, Vector]]:
        """Yield (generator index, replacement vector) per rule."""
        for k in range(self.num_rules):
            yield int(self.rule_index[k]), tuple(self.rule_add[k].tolist())


@dataclass(frozen=True)
class SearchBounds:
    """Caps for the breadth-first closure search; all positive."""

    max_states: int = 100_000
    max_total_coefficient: int = 64
    max_depth: int = 64

    def __post_init__(self):
        for name in ("max_states", "max_total_coefficient", "max_depth"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")


DEFAULT_MAX_M = 6


@dataclass(frozen=True)
class ReductionTrace:
    """A forward rewrite sequence: each step fires one rule.

    Steps record the generator index fired and the resulting vector, so a
    trace can be replayed and checked independently of how it was found.
    """

    start: Vector
    steps: tuple[tuple[int, Vector], ...]

    @property
    def end(self) -> Vector:
        return self.steps[-1][1] if self.steps else self.start

    def rule_counts(self) -> Counter[int]:
        """How often each generator's rule fired along the trace."""
        return Counter(gen for gen, _ in self.steps)

    def replay(self, rs: RewriteSystem) -> Vector:
        """Re-apply every step, raising ValueError on any illegal step."""
        rules = {int(rs.rule_index[k]): rs.rule_add[k] for k in range(rs.num_rules)}
        current = np.array(self.start, dtype=np.int64)
        if current.shape[0] != rs.num_generators:
            raise ValueError("trace start has wrong length")
        for gen, result in self.steps:
            if gen not in rules:
                raise ValueError(f"no rule for generator index {gen}")
            if current[gen] < 1:
                raise ValueError(f"rule at generator {gen} not applicable")
            current = current + rules[gen]
            current[gen] -= 1
            if tuple(current.tolist()) != tuple(result):
                raise ValueError("recorded step does not match replay")
        return tuple(current.tolist())


@dataclass(frozen=True)
class Closure:
    """Reachable set of one element under forward rewriting."""

    elements: frozenset[Vector]
    truncated: bool


@dataclass(frozen=True)
class EquivalenceOutcome:
    status: str
    descendant: Vector | None = None
    trace_a: ReductionTrace | None = None
    trace_b: ReductionTrace | None = None
    reason: str | None = None
    gamma_values: tuple | None = None
    truncated: bool = False


@dataclass(frozen=True)
class ScalarWitness:
    """Evidence that m copies and m' copies of base rewrite together."""

    base: Vector
    m: int
    m_prime: int
    descendant: Vector
    trace_a: ReductionTrace
    trace_b: ReductionTrace


def as_vector(elem: Sequence[int], rs: RewriteSystem) -> Vector:
    vec = tuple(int(c) for c in elem)
    if len(vec) != rs.num_generators:
        raise LengthMismatchError(
            f"element has length {len(vec)}, presentation has "
            f"{rs.num_generators} generators"
        )
    if any(c < 0 for c in vec):
        raise ValueError("coefficients must be nonnegative")
    return vec


def scale(elem: Sequence[int], m: int) -> Vector:
    return tuple(int(c) * m for c in elem)


def monoid_presentation(matrix: IncidenceMatrix) -> RewriteSystem:
    """Graph-monoid presentation: one rule per regular vertex.

    Generators follow the matrix's vertex order; the rule at a regular
    index rewrites a unit there into that vertex's incidence row.
    """
    t = matrix.num_regular
    return RewriteSystem(
        generators=matrix.order,
        rule_index=np.arange(t, dtype=np.int64),
        rule_add=matrix.entries[:t].copy(),
    )


def cohn_presentation(graph: Graph) -> RewriteSystem:
    """Marker presentation on vertices plus one q-generator per regular.

    The rule at a regular vertex v rewrites a unit at v into the ranges of
    v's outgoing edges plus one unit at q_v; the q-generators are never
    rewritten, so they count how often each rule fired.
    """
    matrix = incidence(graph)
    t = matrix.num_regular
    n = matrix.size
    generators = matrix.order + tuple(f"q_{v}" for v in matrix.order[:t])
    add = np.zeros((t, n + t), dtype=np.int64)
    add[:, :n] = matrix.entries[:t]
    add[np.arange(t), n + np.arange(t)] = 1
    return RewriteSystem(
        generators=generators,
        rule_index=np.arange(t, dtype=np.int64),
        rule_add=add,
    )


def one_step(elem: Sequence[int], rs: RewriteSystem) -> tuple[Vector, ...]:
    """All single-rule successors of elem, in rule order, deduplicated."""
    vec = as_vector(elem, rs)
    seen: set[Vector] = set()
    out: list[Vector] = []
    arr = np.array(vec, dtype=np.int64)
    for k in range(rs.num_rules):
        gen = int(rs.rule_index[k])
        if arr[gen] < 1:
            continue
        succ = arr + rs.rule_add[k]
        succ[gen] -= 1
        tup = tuple(succ.tolist())
        if tup not in seen:
            seen.add(tup)
            out.append(tup)
    return tuple(out)


class _Side:
    """Breadth-first closure of one element, grown level by level."""

    def __init__(self, root: Vector):
        self.vectors: list[Vector] = [root]
        self.totals: list[int] = [sum(root)]
        self.parent: list[int] = [-1]
        self.fired: list[int] = [-1]
        self.seen: dict[Vector, int] = {root: 0}
        self.frontier: list[int] = [0]
        self.depth = 0
        self.truncated = False
        self.capped = False

    def can_expand(self, bounds: SearchBounds) -> bool:
        if not self.frontier or self.capped:
            return False
        if self.depth >= bounds.max_depth:
            self.truncated = True
            return False
        return True

    @property
    def complete(self) -> bool:
        return not self.truncated and not self.frontier

    def expand(self, rs: RewriteSystem, dsum: np.ndarray, bounds: SearchBounds) -> list[int]:
        """Expand one level; returns ids of states first seen here."""
        frontier_vecs = np.array(
            [self.vectors[i] for i in self.frontier], dtype=np.int64
        )
        frontier_totals = np.array(
            [self.totals[i] for i in self.frontier], dtype=np.int64
        )
        children, parents, fired, pruned = expand_frontier(
            frontier_vecs,
            frontier_totals,
            rs.rule_index,
            rs.rule_add,
            dsum,
            bounds.max_total_coefficient,
        )
        if pruned:
            self.truncated = True
        new_ids: list[int] = []
        rows = children.tolist()
        for j, row in enumerate(rows):
            key = tuple(row)
            if key in self.seen:
                continue
            if len(self.vectors) >= bounds.max_states:
                self.truncated = True
                self.capped = True
                break
            node = len(self.vectors)
            self.seen[key] = node
            self.vectors.append(key)
            self.totals.append(int(frontier_totals[parents[j]] + dsum[fired[j]]))
            self.parent.append(self.frontier[parents[j]])
            self.fired.append(int(rs.rule_index[fired[j]]))
            new_ids.append(node)
        self.frontier = [] if self.capped else new_ids
        self.depth += 1
        return new_ids

    def trace_to(self, node: int) -> ReductionTrace:
        chain: list[int] = []
        cur = node
        while cur != 0:
            chain.append(cur)
            cur = self.parent[cur]
        chain.reverse()
        steps = tuple((self.fired[i], self.vectors[i]) for i in chain)
        return ReductionTrace(start=self.vectors[0], steps=steps)


def _rule_dsum(rs: RewriteSystem) -> np.ndarray:
    if rs.num_rules == 0:
        return np.empty(0, dtype=np.int64)
    return rs.rule_add.sum(axis=1) - 1


def forward_closure(
    elem: Sequence[int], rs: RewriteSystem, bounds: SearchBounds | None = None
) -> Closure:
    """All vectors reachable from elem by forward rewriting, within bounds.

    States whose total coefficient would exceed the bound are pruned, and
    the search stops at the state or depth caps; any of these sets the
    truncated flag.
    """
    bounds = bounds or SearchBounds()
    side = _Side(as_vector(elem, rs))
    dsum = _rule_dsum(rs)
    while side.can_expand(bounds):
        side.expand(rs, dsum, bounds)
    return Closure(elements=frozenset(side.vectors), truncated=side.truncated)


def decide_equivalent(
    a: Sequence[int],
    b: Sequence[int],
    rs: RewriteSystem,
    bounds: SearchBounds | None = None,
    invariant: "WeightCertificate | None" = None,
) -> EquivalenceOutcome:
    """Decide whether two nonzero elements are equal in the quotient monoid.

    The two reachability closures grow alternately, one breadth-first level
    at a time, intersecting after every level.  Possible outcomes:

    - equivalent: a common descendant was reached from both sides; the
      returned traces replay to it.
    - not-equivalent: either the supplied weight functional takes different
      values on a and b (values reported), or both closures are complete
      within bounds and disjoint.
    - unknown: the search was truncated without finding a common vector.
    """
    from .certificates import gamma

    bounds = bounds or SearchBounds()
    va = as_vector(a, rs)
    vb = as_vector(b, rs)
    if not any(va) or not any(vb):
        raise ZeroElementError("equivalence search requires nonzero elements")

    if va == vb:
        empty = ReductionTrace(start=va, steps=())
        return EquivalenceOutcome(
            status=EQUIVALENT, descendant=va, trace_a=empty, trace_b=empty
        )

    if invariant is not None:
        ga = gamma(invariant, va)
        gb = gamma(invariant, vb)
        if ga != gb:
            return EquivalenceOutcome(
                status=NOT_EQUIVALENT,
                reason="gamma-separation",
                gamma_values=(ga, gb),
            )

    side_a = _Side(va)
    side_b = _Side(vb)
    dsum = _rule_dsum(rs)

    while True:
        progressed = False
        for side, other in ((side_a, side_b), (side_b, side_a)):
            if not side.can_expand(bounds):
                continue
            new_ids = side.expand(rs, dsum, bounds)
            progressed = True
            hits = [n for n in new_ids if side.vectors[n] in other.seen]
            if hits:
                common = min(side.vectors[n] for n in hits)
                return EquivalenceOutcome(
                    status=EQUIVALENT,
                    descendant=common,
                    trace_a=side_a.trace_to(side_a.seen[common]),
                    trace_b=side_b.trace_to(side_b.seen[common]),
                )
        if not progressed:
            break

    if side_a.complete and side_b.complete:
        return EquivalenceOutcome(
            status=NOT_EQUIVALENT, reason="disjoint-closures"
        )
    return EquivalenceOutcome(status=UNKNOWN, truncated=True)


def normal_form(elem: Sequence[int], rs: RewriteSystem) -> Vector:
    """The unique fully rewritten form, when rewriting terminates.

    Terminates exactly when no rewritable generator feeds back into a
    rewritable generator cycle; in that case the result has coefficient
    zero at every rewritable generator and does not depend on firing
    order.  Raises NonTerminatingError on a dependency cycle.
    """
    vec = as_vector(elem, rs)
    t = rs.num_rules
    gen_to_rule = {int(rs.rule_index[k]): k for k in range(t)}

    # depends[k] holds rule positions whose generators appear in k's
    # replacement; firing k feeds those generators.
    depends: list[list[int]] = [[] for _ in range(t)]
    for k in range(t):
        for gen, rule_pos in gen_to_rule.items():
            if rs.rule_add[k, gen] > 0:
                depends[k].append(rule_pos)

    # Cycle check plus topological order (dependers fire first).
    state = [0] * t  # 0 unvisited, 1 on stack, 2 done
    order: list[int] = []

    def visit(k: int) -> None:
        if state[k] == 1:
            gen = int(rs.rule_index[k])
            raise NonTerminatingError(
                f"rewriting does not terminate: generator "
                f"{rs.generators[gen]!r} feeds back into itself"
            )
        if state[k] == 2:
            return
        state[k] = 1
        for nxt in depends[k]:
            visit(nxt)
        state[k] = 2
        order.append(k)

    for k in range(t):
        visit(k)
    order.reverse()

    current = np.array(vec, dtype=np.int64)
    for k in order:
        gen = int(rs.rule_index[k])
        count = int(current[gen])
        if count > 0:
            current[gen] = 0
            current += count * rs.rule_add[k]
    return tuple(current.tolist())


def find_scalar_witness(
    x: Sequence[int],
    rs: RewriteSystem,
    max_m: int = DEFAULT_MAX_M,
    bounds: SearchBounds | None = None,
) -> ScalarWitness | None:
    """Least pair m < m' <= max_m with m*x equivalent to m'*x, or None."""
    if max_m < 2:
        raise OutOfRangeError(f"max_m must be at least 2, got {max_m}")
    vec = as_vector(x, rs)
    if not any(vec):
        raise ZeroElementError("witness search requires a nonzero element")
    for m in range(1, max_m):
        for m_prime in range(m + 1, max_m + 1):
            outcome = decide_equivalent(scale(vec, m), scale(vec, m_prime), rs, bounds)
            if outcome.status == EQUIVALENT:
                return ScalarWitness(
                    base=vec,
                    m=m,
                    m_prime=m_prime,
                    descendant=outcome.descendant,
                    trace_a=outcome.trace_a,
                    trace_b=outcome.trace_b,
                )
    return None
