"""Census of limit square roots over a dual graph.

A square root of a line bundle with prescribed degree parities lives on a
blow-up of the curve; the blown-up node sets are exactly the edge subsets
whose per-vertex non-loop count matches the parity vector mod 2.  Those
subsets form a coset of the GF(2) cycle space and are found by a linear
solve, never by subset enumeration.  Per support, the number of isomorphism
classes, the multiplicity in the zero-dimensional census scheme, and the
odd/even split follow in closed form.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .dual_graph import DualGraph, VertexId
from .theta_counts import n_even, n_odd

__all__ = [
    "ParityModel",
    "RootCensusEntry",
    "satisfies_parity_condition",
    "admissible_subgraphs",
    "count_admissible",
    "class_count",
    "support_multiplicity",
    "parity_census",
    "full_census",
    "support_mask",
]


class ParityModel(enum.Enum):
    """Which rule produced an odd/even split.

    EXACT_COMPACT: every leftover component is smooth, the split is the exact
    parity convolution of the per-component counts.  HARRIS_SPLIT: some
    component keeps a node, odd and even each take half.  NOT_COMPUTED marks
    entries for parities other than the canonical one.
    """

    EXACT_COMPACT = "ExactCompact"
    HARRIS_SPLIT = "HarrisSplit"
    NOT_COMPUTED = "NotComputed"


@dataclass(frozen=True)
class RootCensusEntry:
    support: frozenset[int]
    support_mask: int
    class_count: int
    multiplicity: int
    odd: int
    even: int
    parity_model: ParityModel


def support_mask(support: Iterable[int]) -> int:
    mask = 0
    for idx in support:
        mask |= 1 << idx
    return mask


def _check_parity_vector(graph: DualGraph, parity: Mapping[VertexId, int]) -> None:
    if set(parity) != set(graph.vertex_ids):
        raise ValueError("parity vector domain does not match the vertex set")
    for v, bit in parity.items():
        if bit not in (0, 1):
            raise ValueError(f"parity at vertex {v!r} must be 0 or 1")


def _incidence_masks(graph: DualGraph) -> list[int]:
    """Per-vertex bitmask of incident non-loop edges, in vertex order."""
    masks = {v: 0 for v in graph.vertex_ids}
    for idx, (a, b) in enumerate(graph.edges):
        if a != b:
            masks[a] |= 1 << idx
            masks[b] |= 1 << idx
    return [masks[v] for v in graph.vertex_ids]


def satisfies_parity_condition(
    graph: DualGraph, support: Iterable[int], parity: Mapping[VertexId, int]
) -> bool:
    """Whether the edge subset meets the parity bit at every vertex.

    Loops count twice and therefore never change a vertex's count mod 2.
    """
    _check_parity_vector(graph, parity)
    mask = support_mask(graph.check_support(support))
    return all(
        (mask & vmask).bit_count() % 2 == parity[v]
        for v, vmask in zip(graph.vertex_ids, _incidence_masks(graph))
    )


def _solve(graph: DualGraph, parity: Mapping[VertexId, int]):
    """Solve the vertex/edge incidence system over GF(2).

    Returns (particular, basis) with the basis spanning the cycle space, or
    None when the system has no solution.  Rows and solutions are bitmasks
    over edge indices; an extra bit at position |E| carries the parity.
    """
    m = len(graph.edges)
    edge_bits = (1 << m) - 1
    pivot_rows: dict[int, int] = {}
    for vmask, v in zip(_incidence_masks(graph), graph.vertex_ids):
        cur = vmask | (parity[v] << m)
        while True:
            cols = cur & edge_bits
            if cols == 0:
                if cur >> m:
                    return None
                break
            col = (cols & -cols).bit_length() - 1
            if col in pivot_rows:
                cur ^= pivot_rows[col]
            else:
                pivot_rows[col] = cur
                break
    # back-substitute to reduced echelon form
    for col in sorted(pivot_rows, reverse=True):
        row = pivot_rows[col]
        for other in pivot_rows:
            if other != col and pivot_rows[other] >> col & 1:
                pivot_rows[other] ^= row
    particular = 0
    for col, row in pivot_rows.items():
        if row >> m:
            particular |= 1 << col
    basis = []
    for free in range(m):
        if free in pivot_rows:
            continue
        vec = 1 << free
        for col, row in pivot_rows.items():
            if row >> free & 1:
                vec |= 1 << col
        basis.append(vec)
    return particular, basis


def _iter_coset(particular: int, basis: list[int]) -> Iterator[int]:
    for combo in range(1 << len(basis)):
        mask = particular
        for i, vec in enumerate(basis):
            if combo >> i & 1:
                mask ^= vec
        yield mask


def admissible_subgraphs(
    graph: DualGraph, parity: Mapping[VertexId, int]
) -> list[frozenset[int]]:
    """All admissible edge subsets, ordered by their edge-index bitmask.

    Empty when the parity system is unsolvable; otherwise exactly
    2^betti1(graph) subsets.
    """
    _check_parity_vector(graph, parity)
    solved = _solve(graph, parity)
    if solved is None:
        return []
    particular, basis = solved
    masks = sorted(_iter_coset(particular, basis))
    m = len(graph.edges)
    return [frozenset(i for i in range(m) if mask >> i & 1) for mask in masks]


def count_admissible(graph: DualGraph, parity: Mapping[VertexId, int]) -> int:
    """2^betti1(graph) when the parity system is solvable, else 0."""
    _check_parity_vector(graph, parity)
    solved = _solve(graph, parity)
    return 0 if solved is None else 1 << len(solved[1])


def class_count(graph: DualGraph, support: Iterable[int]) -> int:
    """Isomorphism classes of square roots supported on the given blow-up.

    2^(2 * genus_sum) pullbacks to the normalization times one gluing choice
    per independent cycle left after deleting the support.  Admissibility of
    the support is the caller's responsibility.
    """
    support = graph.check_support(support)
    return 1 << (2 * graph.genus_sum + graph.delete_edges(support).betti1())


def support_multiplicity(graph: DualGraph, support: Iterable[int]) -> int:
    """Multiplicity of the support's classes in the census scheme:
    2^betti1 of the contraction of the unsupported part."""
    support = graph.check_support(support)
    return 1 << graph.sigma_graph(support).betti1()


def _convolve_exact(pairs: list[tuple[int, int]]) -> tuple[int, int]:
    # odd = (prod(o+e) - prod(e-o)) / 2, exactly; the difference is even
    total, signed = 1, 1
    for o, e in pairs:
        total *= o + e
        signed *= e - o
    odd = (total - signed) // 2
    return odd, total - odd


def parity_census(
    graph: DualGraph, support: Iterable[int]
) -> tuple[int, int, ParityModel]:
    """Odd/even split of the classes on a support admissible for the
    canonical parity.

    When deleting the support leaves only isolated loop-free vertices, the
    split is the exact convolution of the smooth per-genus counts.  As soon
    as a leftover component keeps a node the split is declared even (each
    parity takes half), the rule inherited from the nodal odd counts
    2^(2*g_nu + k - 1); a canonical-parity support always leaves an even
    class count in that regime.
    """
    support = graph.check_support(support)
    if not satisfies_parity_condition(graph, support, graph.omega_parity()):
        raise ValueError(
            "support is not admissible for the canonical parity; "
            "the odd/even census is defined only there"
        )
    rest = graph.delete_edges(support)
    if not rest.edges:
        pairs = [(n_odd(g), n_even(g)) for _, g in rest.vertices]
        odd, even = _convolve_exact(pairs)
        return odd, even, ParityModel.EXACT_COMPACT
    total = class_count(graph, support)
    odd = total // 2
    return odd, total - odd, ParityModel.HARRIS_SPLIT


def full_census(
    graph: DualGraph, parity: Mapping[VertexId, int]
) -> list[RootCensusEntry]:
    """One entry per admissible support, in bitmask order.

    Odd/even columns are populated only for the canonical parity; any other
    parity gets zeros under the NOT_COMPUTED sentinel.
    """
    _check_parity_vector(graph, parity)
    is_canonical = dict(parity) == graph.omega_parity()
    entries = []
    for support in admissible_subgraphs(graph, parity):
        if is_canonical:
            odd, even, model = parity_census(graph, support)
        else:
            odd, even, model = 0, 0, ParityModel.NOT_COMPUTED
        entries.append(
            RootCensusEntry(
                support=support,
                support_mask=support_mask(support),
                class_count=class_count(graph, support),
                multiplicity=support_multiplicity(graph, support),
                odd=odd,
                even=even,
                parity_model=model,
            )
        )
    return entries
