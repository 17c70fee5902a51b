"""Built-in example graphs used by the CLI and the test corpus."""

from __future__ import annotations

import re

from .construct import cohn_companion, family
from .errors import OutOfRangeError, UnknownExampleError
from .graphs import Graph, graph_from, validate

_FAMILY_RE = re.compile(r"family-(\d+)-(\d+)\Z")


def line_graph() -> Graph:
    """Three vertices in a row: u -> v -> w."""
    return validate(graph_from(["u", "v", "w"], [("e", "u", "v"), ("f", "v", "w")]))


def rose_two() -> Graph:
    """One vertex with two loops (the rank-two rose)."""
    return validate(graph_from(["v"], [("e", "v", "v"), ("f", "v", "v")]))


def f_rose_two() -> Graph:
    return cohn_companion(rose_two()).graph


def f_line_graph() -> Graph:
    return cohn_companion(line_graph()).graph


_STATIC = {
    "line": (line_graph, "three vertices u -> v -> w"),
    "r2": (rose_two, "one vertex with two loops"),
    "f-r2": (f_rose_two, "full companion of r2"),
    "f-line": (f_line_graph, "full companion of line"),
    "relative-2-1": (
        lambda: family(2, 1)[0],
        "two-vertex family graph; use --algebra relative --x v2",
    ),
}


def example_names() -> tuple[str, ...]:
    return tuple(_STATIC) + ("family-N-M",)


def describe_examples() -> tuple[tuple[str, str], ...]:
    rows = [(name, desc) for name, (_, desc) in _STATIC.items()]
    rows.append(("family-N-M", "family graph with N vertices; X is the last M"))
    return tuple(rows)


def load_example(name: str) -> tuple[Graph, tuple[str, ...]]:
    """Resolve a fixture name to (graph, suggested X).

    X is nonempty only for the relative examples; family-N-M is
    parameterized, e.g. family-3-2.
    """
    if name in _STATIC:
        if name == "relative-2-1":
            return family(2, 1)
        return _STATIC[name][0](), ()
    m = _FAMILY_RE.match(name)
    if m:
        try:
            return family(int(m.group(1)), int(m.group(2)))
        except OutOfRangeError as exc:
            raise UnknownExampleError(f"bad family parameters in {name!r}: {exc}")
    raise UnknownExampleError(
        f"unknown example {name!r}; available: {', '.join(example_names())}"
    )
