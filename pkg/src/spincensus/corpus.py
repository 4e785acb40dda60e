"""Graph builders and deterministic corpora for the verification suites."""

from __future__ import annotations

import random
from itertools import combinations_with_replacement
from typing import Iterator, Sequence

from .dual_graph import DualGraph

__all__ = [
    "banana",
    "double_edge_star",
    "connected_multigraphs",
    "random_multigraph",
    "random_corpus",
    "random_parity",
]


def banana(genus_a: int = 0, genus_b: int = 0, n_edges: int = 2) -> DualGraph:
    """Two vertices joined by ``n_edges`` parallel edges."""
    return DualGraph(
        ((0, genus_a), (1, genus_b)),
        tuple((0, 1) for _ in range(n_edges)),
    )


def double_edge_star(
    n: int, center_genus: int = 0, satellite_genera: Sequence[int] | int = 1
) -> DualGraph:
    """Center vertex joined to each of n satellites by a pair of parallel edges.

    Satellite i's pair sits at edge indices (2i, 2i+1), so "the first r
    pairs" is the index set 0..2r-1.
    """
    if isinstance(satellite_genera, int):
        genera = [satellite_genera] * n
    else:
        genera = list(satellite_genera)
        if len(genera) != n:
            raise ValueError("need one genus per satellite")
    vertices = [(0, center_genus)] + [(i, genera[i - 1]) for i in range(1, n + 1)]
    edges = []
    for i in range(1, n + 1):
        edges.append((0, i))
        edges.append((0, i))
    return DualGraph(tuple(vertices), tuple(edges))


def connected_multigraphs(max_edges: int) -> Iterator[DualGraph]:
    """Every connected labelled multigraph with at most ``max_edges`` edges.

    Loops and parallel edges included; vertex count runs up to max_edges + 1
    (a tree) and genera follow the fixed pattern i mod 2 so genus-weighted
    identities get exercised too.
    """
    for n_vertices in range(1, max_edges + 2):
        slots = [
            (a, b)
            for a in range(n_vertices)
            for b in range(a, n_vertices)
        ]
        vertices = tuple((i, i % 2) for i in range(n_vertices))
        min_edges = max(n_vertices - 1, 0)
        for n_edges in range(min_edges, max_edges + 1):
            for chosen in combinations_with_replacement(slots, n_edges):
                graph = DualGraph(vertices, tuple(chosen))
                if len(graph.components()) == 1:
                    yield graph


def random_multigraph(
    rng: random.Random,
    max_vertices: int = 6,
    max_edges: int = 12,
    max_genus: int = 3,
) -> DualGraph:
    n_vertices = rng.randint(1, max_vertices)
    n_edges = rng.randint(0, max_edges)
    vertices = tuple((i, rng.randint(0, max_genus)) for i in range(n_vertices))
    edges = []
    for _ in range(n_edges):
        a = rng.randrange(n_vertices)
        b = rng.randrange(n_vertices)
        edges.append((min(a, b), max(a, b)))
    return DualGraph(vertices, tuple(edges))


def random_corpus(count: int = 200, seed: int = 20260801, **kwargs) -> list[DualGraph]:
    rng = random.Random(seed)
    return [random_multigraph(rng, **kwargs) for _ in range(count)]


def random_parity(rng: random.Random, graph: DualGraph) -> dict:
    return {v: rng.randint(0, 1) for v in graph.vertex_ids}
