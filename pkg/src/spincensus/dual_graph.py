"""Genus-labelled multigraphs: the dual-graph calculus for nodal curves.

A :class:`DualGraph` has one vertex per irreducible component, labelled with
its geometric genus, and one edge per node.  Loops record self-nodes and
parallel edges stay distinguishable because edges are addressed by their
position in the edge list.  Everything is immutable and every operation is a
pure function, so values can be shared freely between threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Mapping

VertexId = Hashable

__all__ = ["DualGraph", "graph_from_json", "graph_to_json", "graph_to_dot"]


@dataclass(frozen=True)
class DualGraph:
    """Multigraph with a nonnegative genus label on each vertex.

    ``vertices`` is an ordered tuple of ``(vertex_id, genus)`` pairs with
    unique ids; ``edges`` is an ordered tuple of unordered endpoint pairs.
    An edge subset ("support") is always a set of edge indices, never a set
    of endpoint pairs, so parallel edges can be selected independently.
    """

    vertices: tuple[tuple[VertexId, int], ...]
    edges: tuple[tuple[VertexId, VertexId], ...]

    def __post_init__(self) -> None:
        verts = tuple((v, int(g)) for v, g in self.vertices)
        edges = tuple((a, b) for a, b in self.edges)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", edges)
        ids = [v for v, _ in verts]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate vertex ids")
        for v, g in verts:
            if g < 0:
                raise ValueError(f"negative genus at vertex {v!r}")
        known = set(ids)
        for a, b in edges:
            if a not in known or b not in known:
                raise ValueError(f"edge ({a!r}, {b!r}) names an unknown vertex")

    # ------------------------------------------------------------------
    # accessors

    @cached_property
    def _position(self) -> dict[VertexId, int]:
        return {v: i for i, (v, _) in enumerate(self.vertices)}

    @property
    def vertex_ids(self) -> tuple[VertexId, ...]:
        return tuple(v for v, _ in self.vertices)

    @property
    def genus_sum(self) -> int:
        """Sum of the vertex genera (the genus of the normalization)."""
        return sum(g for _, g in self.vertices)

    def genus(self, v: VertexId) -> int:
        return self.vertices[self._position[v]][1]

    def check_support(self, support: Iterable[int]) -> frozenset[int]:
        """Normalize an edge subset to a frozenset of valid edge indices."""
        out = frozenset(support)
        for idx in out:
            if not isinstance(idx, int) or not 0 <= idx < len(self.edges):
                raise ValueError(f"invalid edge index {idx!r}")
        return out

    # ------------------------------------------------------------------
    # graph calculus

    def components(self) -> tuple[tuple[VertexId, ...], ...]:
        """Connected components as vertex-id tuples.

        Vertices inside a component keep construction order and components
        are ordered by their smallest contained vertex, so the result is the
        same on every run.
        """
        adjacency: dict[VertexId, set[VertexId]] = {v: set() for v in self.vertex_ids}
        for a, b in self.edges:
            adjacency[a].add(b)
            adjacency[b].add(a)
        seen: set[VertexId] = set()
        out: list[tuple[VertexId, ...]] = []
        for v in self.vertex_ids:
            if v in seen:
                continue
            stack, members = [v], {v}
            while stack:
                cur = stack.pop()
                for nxt in adjacency[cur]:
                    if nxt not in members:
                        members.add(nxt)
                        stack.append(nxt)
            seen |= members
            out.append(tuple(sorted(members, key=self._position.__getitem__)))
        return tuple(out)

    def betti1(self) -> int:
        """First Betti number |E| - |V| + #components (0 for the empty graph)."""
        return len(self.edges) - len(self.vertices) + len(self.components())

    def arithmetic_genus(self) -> int:
        """Genus of the modelled nodal curve: sum of vertex genera plus betti1."""
        return self.genus_sum + self.betti1()

    def delete_edges(self, support: Iterable[int]) -> "DualGraph":
        """Drop the edges named by ``support``; vertices and genera survive."""
        support = self.check_support(support)
        kept = tuple(e for i, e in enumerate(self.edges) if i not in support)
        return DualGraph(self.vertices, kept)

    def sigma_graph(self, support: Iterable[int]) -> "DualGraph":
        """Contract the complement of ``support``.

        Vertices are the connected components left after deleting the support
        edges, carrying the summed genus of their members and named after
        their first member; the support edges reappear between components
        (possibly as loops).  Its betti1 and the one of the deleted graph add
        up to betti1 of the original graph.
        """
        support = self.check_support(support)
        comps = self.delete_edges(support).components()
        representative: dict[VertexId, VertexId] = {}
        verts = []
        for comp in comps:
            rep = comp[0]
            verts.append((rep, sum(self.genus(v) for v in comp)))
            for member in comp:
                representative[member] = rep
        edges = tuple(
            (representative[self.edges[i][0]], representative[self.edges[i][1]])
            for i in sorted(support)
        )
        return DualGraph(tuple(verts), edges)

    def omega_parity(self) -> dict[VertexId, int]:
        """Per-vertex degree parity of the dualizing sheaf.

        On a component the degree is even except for the attaching points to
        the rest of the curve, so the parity at a vertex is the number of
        non-loop edges meeting it, mod 2.  Loops contribute two points and
        drop out.
        """
        counts = {v: 0 for v in self.vertex_ids}
        for a, b in self.edges:
            if a != b:
                counts[a] += 1
                counts[b] += 1
        return {v: c % 2 for v, c in counts.items()}


# ----------------------------------------------------------------------
# serialization

def graph_to_json(graph: DualGraph, indent: int | None = 2) -> str:
    """Render the JSON graph schema: vertices with ids and genera, edge pairs."""
    obj = {
        "vertices": [{"id": str(v), "genus": g} for v, g in graph.vertices],
        "edges": [[str(a), str(b)] for a, b in graph.edges],
    }
    return json.dumps(obj, indent=indent)


def graph_from_json(text: str) -> DualGraph:
    """Parse the JSON graph schema; malformed input raises ValueError."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed graph JSON: {exc}") from exc
    if not isinstance(obj, dict) or "vertices" not in obj or "edges" not in obj:
        raise ValueError('graph JSON must be an object with "vertices" and "edges"')
    vertices = []
    for rec in obj["vertices"]:
        if not isinstance(rec, dict) or "id" not in rec or "genus" not in rec:
            raise ValueError('each vertex record needs "id" and "genus"')
        genus = rec["genus"]
        if not isinstance(genus, int) or genus < 0:
            raise ValueError(f"genus of vertex {rec['id']!r} must be a nonnegative integer")
        vertices.append((str(rec["id"]), genus))
    edges = []
    for rec in obj["edges"]:
        if not isinstance(rec, (list, tuple)) or len(rec) != 2:
            raise ValueError("each edge record must be a pair of vertex ids")
        edges.append((str(rec[0]), str(rec[1])))
    return DualGraph(tuple(vertices), tuple(edges))


def graph_to_dot(
    graph: DualGraph,
    node_attrs: Mapping[VertexId, Mapping[str, str]] | None = None,
) -> str:
    """Render an undirected DOT graph, one node per vertex and one line per edge.

    ``node_attrs`` may attach extra attributes (e.g. tail kinds) to vertices.
    """
    lines = ["graph dual_graph {"]
    for v, g in graph.vertices:
        attrs = {"label": f"{v} (g={g})"}
        if node_attrs and v in node_attrs:
            attrs.update(node_attrs[v])
        rendered = ", ".join(f'{key}="{val}"' for key, val in attrs.items())
        lines.append(f'  "{v}" [{rendered}];')
    for a, b in graph.edges:
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
