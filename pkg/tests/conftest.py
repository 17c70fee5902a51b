"""Shared helpers: the example corpus, random graphs, and a CLI runner."""

from __future__ import annotations

import contextlib
import io
import random

import pytest

from cohnibn import (
    AlgebraSpec,
    Graph,
    KIND_COHN,
    KIND_LEAVITT,
    KIND_RELATIVE,
    f_line_graph,
    f_rose_two,
    family,
    graph_from,
    line_graph,
    rose_two,
    validate,
)
from cohnibn.cli import main as cli_main


def make_random_graph(
    rng: random.Random,
    max_vertices: int = 6,
    max_edges: int = 12,
    max_multiplicity: int = 3,
) -> Graph:
    """A validated random multigraph within the given size caps."""
    n = rng.randint(1, max_vertices)
    vertices = [f"n{i}" for i in range(n)]
    edges: list[tuple[str, str, str]] = []
    counts: dict[tuple[str, str], int] = {}
    for _ in range(rng.randint(0, max_edges)):
        src = rng.choice(vertices)
        dst = rng.choice(vertices)
        if counts.get((src, dst), 0) >= max_multiplicity:
            continue
        counts[src, dst] = counts.get((src, dst), 0) + 1
        edges.append((f"e{len(edges)}", src, dst))
    return validate(graph_from(vertices, edges))


def corpus_graphs() -> list[tuple[str, Graph, tuple[str, ...]]]:
    """Every built-in example plus a few family instances, with their X."""
    entries = [
        ("line", line_graph(), ()),
        ("r2", rose_two(), ()),
        ("f-r2", f_rose_two(), ()),
        ("f-line", f_line_graph(), ()),
    ]
    for n, m in ((2, 1), (3, 1), (3, 2), (4, 2)):
        graph, x = family(n, m)
        entries.append((f"family-{n}-{m}", graph, x))
    return entries


def corpus_specs() -> list[tuple[str, AlgebraSpec]]:
    """Every corpus graph under every applicable algebra kind."""
    specs = []
    for name, graph, x in corpus_graphs():
        specs.append((f"{name}:cohn", AlgebraSpec(kind=KIND_COHN, graph=graph)))
        specs.append(
            (f"{name}:leavitt", AlgebraSpec(kind=KIND_LEAVITT, graph=graph))
        )
        if x:
            specs.append(
                (
                    f"{name}:relative",
                    AlgebraSpec(kind=KIND_RELATIVE, graph=graph, x=x),
                )
            )
    return specs


def run_cli(argv: list[str]) -> tuple[int, str, str]:
    """Run the CLI in process; returns (exit code, stdout, stderr)."""
    out = io.StringIO()
    err = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = cli_main(argv)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def cli():
    return run_cli


@pytest.fixture
def corpus():
    return corpus_graphs()
