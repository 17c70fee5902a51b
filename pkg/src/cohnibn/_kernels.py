"""Frontier-expansion kernels for the breadth-first equivalence search.

Given a frontier of coefficient vectors and the rewrite rules, produce all
one-step successors whose total coefficient stays within the bound, in
(parent position, rule position) order, together with bookkeeping arrays.
This is the only numerically hot loop in the package; it ships as a numba
@njit kernel with a pure-numpy fallback.  Set COHNIBN_NO_NUMBA=1 to force
the fallback (it is also used automatically when numba is unavailable).
"""

from __future__ import annotations

import os

import numpy as np

_FORCE_NUMPY = os.environ.get("COHNIBN_NO_NUMBA", "").strip().lower() in {
    "1",
    "true",
    "yes",
    "on",
}


def expand_frontier_numpy(frontier, totals, rule_index, rule_add, rule_dsum, max_total):
    """Vectorized expansion; one concatenated block per rule, then reordered.

    Returns (children, parents, fired, pruned): children[j] is the result of
    firing rule position fired[j] on frontier row parents[j]; pruned counts
    applicable firings dropped for exceeding max_total.
    """
    num_rows, width = frontier.shape
    num_rules = rule_index.shape[0]
    empty = (
        np.empty((0, width), dtype=np.int64),
        np.empty(0, dtype=np.int64),
        np.empty(0, dtype=np.int64),
    )
    if num_rules == 0 or num_rows == 0:
        return (*empty, 0)

    children_parts = []
    parent_parts = []
    fired_parts = []
    pruned = 0
    for k in range(num_rules):
        gen = rule_index[k]
        applicable = frontier[:, gen] > 0
        if not applicable.any():
            continue
        within = totals + rule_dsum[k] <= max_total
        pruned += int(np.count_nonzero(applicable & ~within))
        keep = np.nonzero(applicable & within)[0]
        if keep.size == 0:
            continue
        block = frontier[keep] + rule_add[k]
        block[:, gen] -= 1
        children_parts.append(block)
        parent_parts.append(keep)
        fired_parts.append(np.full(keep.size, k, dtype=np.int64))

    if not children_parts:
        return (*empty, pruned)
    children = np.concatenate(children_parts, axis=0)
    parents = np.concatenate(parent_parts)
    fired = np.concatenate(fired_parts)
    # Same (parent, rule) order the loop kernel produces.
    order = np.lexsort((fired, parents))
    return (
        np.ascontiguousarray(children[order]),
        parents[order],
        fired[order],
        pruned,
    )


def _expand_frontier_loops(frontier, totals, rule_index, rule_add, rule_dsum, max_total):
    num_rows, width = frontier.shape
    num_rules = rule_index.shape[0]
    count = 0
    pruned = 0
    for p in range(num_rows):
        for k in range(num_rules):
            if frontier[p, rule_index[k]] > 0:
                if totals[p] + rule_dsum[k] <= max_total:
                    count += 1
                else:
                    pruned += 1
    children = np.empty((count, width), dtype=np.int64)
    parents = np.empty(count, dtype=np.int64)
    fired = np.empty(count, dtype=np.int64)
    pos = 0
    for p in range(num_rows):
        for k in range(num_rules):
            gen = rule_index[k]
            if frontier[p, gen] > 0 and totals[p] + rule_dsum[k] <= max_total:
                for j in range(width):
                    children[pos, j] = frontier[p, j] + rule_add[k, j]
                children[pos, gen] -= 1
                parents[pos] = p
                fired[pos] = k
                pos += 1
    return children, parents, fired, pruned


if _FORCE_NUMPY:
    NUMBA_ENABLED = False
    expand_frontier_jit = None
else:
    try:
        from numba import njit

        expand_frontier_jit = njit(cache=False)(_expand_frontier_loops)
        NUMBA_ENABLED = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        NUMBA_ENABLED = False
        expand_frontier_jit = None

expand_frontier = expand_frontier_jit if NUMBA_ENABLED else expand_frontier_numpy

BACKEND = "numba" if NUMBA_ENABLED else "numpy"
