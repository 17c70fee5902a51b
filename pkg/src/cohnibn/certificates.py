"""Exact-rational weight certificates for the IBN property.

A weight certificate assigns one rational weight per monoid generator so
that the weights sum to 1 and every rewrite rule preserves the induced
linear functional Gamma(z) = sum z_l * w_l.  Gamma is then constant on
equivalence classes, and Gamma(m * rho) = m for the all-ones vector rho,
which separates distinct multiples of rho and so certifies IBN.

Everything here runs over arbitrary-precision fractions; there is no
floating point in this module.  Elimination uses a fixed pivoting rule
(leftmost nonzero column, topmost row) and sets free variables to zero,
so results are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Sequence

from .construct import companion_incidence
from .errors import LengthMismatchError
from .graphs import IncidenceMatrix

if TYPE_CHECKING:
    from .rewriting import RewriteSystem


@dataclass(frozen=True)
class CertificateSystem:
    """The linear system whose solutions are weight certificates.

    Row 0 asks the weights to sum to 1; row i (1 <= i <= T) asks the
    weight of the i-th regular generator to equal the weighted sum of its
    incidence row, written as (row_i - e_i) . w = 0.
    """

    matrix: tuple[tuple[Fraction, ...], ...]
    target: tuple[Fraction, ...]
    generators: tuple[str, ...]


@dataclass(frozen=True)
class WeightCertificate:
    weights: tuple[Fraction, ...]
    generators: tuple[str, ...]


def build_system(matrix: IncidenceMatrix) -> CertificateSystem:
    n = matrix.size
    t = matrix.num_regular
    rows: list[tuple[Fraction, ...]] = [tuple(Fraction(1) for _ in range(n))]
    for i in range(t):
        row = [Fraction(int(a)) for a in matrix.entries[i]]
        row[i] -= 1
        rows.append(tuple(row))
    target = tuple(Fraction(1) if i == 0 else Fraction(0) for i in range(t + 1))
    return CertificateSystem(matrix=tuple(rows), target=target, generators=matrix.order)


def _eliminate(rows: list[list[Fraction]], width: int) -> list[tuple[int, int]]:
    """In-place forward elimination; returns (row, column) pivot pairs.

    Only the first ``width`` columns are eligible as pivots, so an
    augmented column can ride along untouched.
    """
    pivots: list[tuple[int, int]] = []
    pivot_row = 0
    for col in range(width):
        found = None
        for r in range(pivot_row, len(rows)):
            if rows[r][col] != 0:
                found = r
                break
        if found is None:
            continue
        if found != pivot_row:
            rows[pivot_row], rows[found] = rows[found], rows[pivot_row]
        lead = rows[pivot_row][col]
        for r in range(pivot_row + 1, len(rows)):
            factor = rows[r][col]
            if factor == 0:
                continue
            ratio = factor / lead
            for c in range(col, len(rows[r])):
                rows[r][c] -= ratio * rows[pivot_row][c]
        pivots.append((pivot_row, col))
        pivot_row += 1
    return pivots


def rational_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    if not rows:
        return 0
    work = [list(r) for r in rows]
    return len(_eliminate(work, len(work[0])))


def solve_exact(system: CertificateSystem) -> WeightCertificate | None:
    """Solve the system exactly, or return None if it is inconsistent.

    When underdetermined, free variables are set to zero, so the result
    is a fixed function of the system.
    """
    width = len(system.generators)
    work = [list(row) + [system.target[i]] for i, row in enumerate(system.matrix)]
    pivots = _eliminate(work, width)
    for r in range(len(pivots), len(work)):
        if work[r][width] != 0:
            return None
    weights = [Fraction(0)] * width
    for r, c in reversed(pivots):
        acc = work[r][width]
        for c2 in range(c + 1, width):
            acc -= work[r][c2] * weights[c2]
        weights[c] = acc / work[r][c]
    return WeightCertificate(weights=tuple(weights), generators=system.generators)


def gamma(cert: WeightCertificate, elem: Sequence[int]) -> Fraction:
    """The certificate's linear functional: sum of coefficient * weight."""
    if len(elem) != len(cert.weights):
        raise LengthMismatchError(
            f"element has length {len(elem)}, certificate has "
            f"{len(cert.weights)} weights"
        )
    total = Fraction(0)
    for c, w in zip(elem, cert.weights):
        if c:
            total += int(c) * w
    return total


def verify_certificate(cert: WeightCertificate, rs: "RewriteSystem") -> bool:
    """Check the two certificate conditions against a rewrite system.

    True iff the weights sum to 1 and, for every rule, the weight of the
    rewritten generator equals Gamma of its replacement.  Together these
    make Gamma invariant under every rewrite step.
    """
    if cert.generators != tuple(rs.generators):
        return False
    if sum(cert.weights, Fraction(0)) != 1:
        return False
    for gen, replacement in rs.rules():
        if cert.weights[gen] != gamma(cert, replacement):
            return False
    return True


def companion_rank_check(matrix: IncidenceMatrix) -> bool:
    """Verify the rank argument that makes companion systems solvable.

    Builds the weight system of the full companion of ``matrix``, checks
    its rank is exactly t+1, then redoes the column reduction that
    explains why: subtracting column i from column n+i leaves unit
    columns in the duplicated block, so the last t+1 columns are
    independent.
    """
    n = matrix.size
    t = matrix.num_regular
    if n == 0:
        return False
    system = build_system(companion_incidence(matrix))
    rows = [list(r) for r in system.matrix]
    if len(_eliminate([r[:] for r in rows], n + t)) != t + 1:
        return False
    reduced = [r[:] for r in rows]
    for j in range(t):
        for r in range(t + 1):
            reduced[r][n + j] -= reduced[r][j]
    for j in range(t):
        for r in range(t + 1):
            expected = 1 if r == j + 1 else 0
            if reduced[r][n + j] != expected:
                return False
    block = [[reduced[r][c] for c in range(n - 1, n + t)] for r in range(t + 1)]
    return rational_rank(block) == t + 1


def serialize_weights(cert: WeightCertificate) -> tuple[str, ...]:
    """Weights as exact fraction strings ('2', '-1', '5/3'), generator order."""
    return tuple(str(w) for w in cert.weights)


def parse_weights(
    strings: Sequence[str], generators: Sequence[str]
) -> WeightCertificate:
    """Inverse of serialize_weights; exact round trip."""
    if len(strings) != len(generators):
        raise LengthMismatchError(
            f"{len(strings)} weights for {len(generators)} generators"
        )
    return WeightCertificate(
        weights=tuple(Fraction(s) for s in strings),
        generators=tuple(generators),
    )
