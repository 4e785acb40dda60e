"""Stable-reduction combinatorics for tacnodal and cuspidal curves.

A general smoothing of an irreducible curve with cusps and tacnodes reduces,
after a finite base change, to a nodal curve: the normalization plus one
elliptic tail per singularity, attached by one node (cusp) or two (tacnode).
This module builds those dual graphs, the symbolic data carried by a
tacnodal tail (its four square-root labels and the automorphisms permuting
them), the fiber bookkeeping behind the multiplicity law 4^(i-j) 6^j 3^k,
and the twisted-spin-curve census over the reduction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping

from . import root_census
from .dual_graph import DualGraph, VertexId
from .theta_counts import CurveProfile, ThetaType, n_odd, theta_count

__all__ = [
    "CENTER",
    "ReductionGraph",
    "BaseChangeOrders",
    "EllipticTail",
    "TailAutomorphismGroup",
    "TwistedSpinFiber",
    "TwisterEntry",
    "SpinCurveCensus",
    "reduction_graph",
    "base_change_orders",
    "tail_automorphisms",
    "twisted_fibers",
    "spin_curve_census",
]

CENTER = "center"
ROOT_LABELS = ("D1", "D2", "D3", "D4")


def _require_no_nodes(profile: CurveProfile) -> None:
    if profile.delta != 0:
        raise ValueError("stable reduction is modelled for cusps and tacnodes only")


@dataclass(frozen=True)
class ReductionGraph:
    """Dual graph of the reduced central fiber.

    The center carries the normalization genus; cusp tails are genus-1
    vertices on a single edge, tacnode tails genus-1 vertices on a pair of
    parallel edges, all attached to the center.
    """

    graph: DualGraph
    center: VertexId
    cusp_tails: tuple[VertexId, ...]
    tacnode_tails: tuple[VertexId, ...]

    def tail_kinds(self) -> dict[VertexId, str]:
        kinds: dict[VertexId, str] = {}
        for v in self.cusp_tails:
            kinds[v] = "cusp"
        for v in self.tacnode_tails:
            kinds[v] = "tacnode"
        return kinds

    def tacnode_edge_pair(self, index: int) -> tuple[int, int]:
        """Edge indices of the parallel pair attaching tacnode tail ``index`` (1-based)."""
        if not 1 <= index <= len(self.tacnode_tails):
            raise ValueError(f"no tacnode tail {index}")
        base = len(self.cusp_tails) + 2 * (index - 1)
        return base, base + 1


def reduction_graph(profile: CurveProfile) -> ReductionGraph:
    """Build the reduction graph for a profile without nodes.

    Edges come cusp tails first, then the tacnode pairs, so supports render
    the same way on every run.  The arithmetic genus equals profile.g.
    """
    _require_no_nodes(profile)
    gt = profile.normalization_genus
    vertices: list[tuple[VertexId, int]] = [(CENTER, gt)]
    edges: list[tuple[VertexId, VertexId]] = []
    cusps = tuple(f"cusp{i}" for i in range(1, profile.gamma + 1))
    tacnodes = tuple(f"tac{i}" for i in range(1, profile.tau + 1))
    for v in cusps:
        vertices.append((v, 1))
        edges.append((CENTER, v))
    for v in tacnodes:
        vertices.append((v, 1))
        edges.append((CENTER, v))
        edges.append((CENTER, v))
    return ReductionGraph(
        graph=DualGraph(tuple(vertices), tuple(edges)),
        center=CENTER,
        cusp_tails=cusps,
        tacnode_tails=tacnodes,
    )


@dataclass(frozen=True)
class BaseChangeOrders:
    """Base-change orders needed by the stable reduction: 6 per cusp, 4 per
    tacnode, combined over the singularities present."""

    cusp: int | None
    tacnode: int | None
    combined: int


def base_change_orders(profile: CurveProfile) -> BaseChangeOrders:
    _require_no_nodes(profile)
    cusp = 6 if profile.gamma > 0 else None
    tacnode = 4 if profile.tau > 0 else None
    combined = math.lcm(*(o for o in (cusp, tacnode) if o is not None)) if (cusp or tacnode) else 1
    return BaseChangeOrders(cusp=cusp, tacnode=tacnode, combined=combined)


@dataclass(frozen=True)
class EllipticTail:
    """Symbolic record of a tacnodal elliptic tail.

    The tail is the double cover of the line branched at 0, 1, infinity, -1
    (j-invariant 1728), attached over 0 and infinity; its four effective
    square roots of the attachment divisor are opaque labels.
    """

    j_invariant: int = 1728
    branch_points: tuple[str, ...] = ("0", "1", "inf", "-1")
    attachment: tuple[str, str] = ("0", "inf")
    square_roots: tuple[str, ...] = ROOT_LABELS

    def __post_init__(self) -> None:
        if self.j_invariant != 1728:
            raise ValueError("a tacnodal elliptic tail has j-invariant 1728")


Permutation = Mapping[str, str]


def _compose(outer: Permutation, inner: Permutation) -> dict[str, str]:
    return {label: outer[inner[label]] for label in ROOT_LABELS}


@dataclass(frozen=True)
class TailAutomorphismGroup:
    """The four tail automorphisms fixing both attachment points, acting on
    the square-root labels.

    ``branch_swap`` fixes the attachment points and exchanges the two free
    branch points; ``cover_involution`` is the deck transformation of the
    double cover; ``composite`` is their product.  Together with the identity
    they form a Klein four-group acting transitively on the labels.
    """

    identity: dict[str, str] = field(
        default_factory=lambda: {d: d for d in ROOT_LABELS}
    )
    branch_swap: dict[str, str] = field(
        default_factory=lambda: {"D1": "D3", "D3": "D1", "D2": "D4", "D4": "D2"}
    )
    cover_involution: dict[str, str] = field(
        default_factory=lambda: {"D1": "D2", "D2": "D1", "D3": "D4", "D4": "D3"}
    )

    @property
    def composite(self) -> dict[str, str]:
        return _compose(self.cover_involution, self.branch_swap)

    @property
    def elements(self) -> tuple[dict[str, str], ...]:
        return (self.identity, self.branch_swap, self.cover_involution, self.composite)

    def orbit(self, label: str) -> frozenset[str]:
        return frozenset(perm[label] for perm in self.elements)

    def is_klein_four(self) -> bool:
        elems = [tuple(sorted(p.items())) for p in self.elements]
        if len(set(elems)) != 4:
            return False
        for p in self.elements:
            if tuple(sorted(_compose(p, p).items())) != elems[0]:
                return False
        for p in self.elements:
            for q in self.elements:
                if tuple(sorted(_compose(p, q).items())) not in set(elems):
                    return False
        return True


def tail_automorphisms() -> TailAutomorphismGroup:
    return TailAutomorphismGroup()


@dataclass(frozen=True)
class TwistedSpinFiber:
    """Fiber bookkeeping for one hyperplane type (i, j, k).

    A representative blow-up pattern keeps tacnodes up to j and beyond i.
    Each class admits 2^(tau - i + j) gluings; the even theta choices on j
    tails contribute 3^j, the tail automorphism orbits 4^(i-j), for a fiber
    of 4^(i-j) 6^j over each hyperplane, times 3^k from the cusps.
    """

    i: int
    j: int
    k: int
    blown_up_tacnodes: tuple[int, ...]
    gluings: int
    even_theta_choices: int
    tail_orbit: int
    fiber_size: int
    cusp_multiplicity: int
    hyperplanes: int
    weighted: int


def twisted_fibers(profile: CurveProfile) -> list[TwistedSpinFiber]:
    """One fiber record per type (i, j, k), in lexicographic order.

    The weighted column sums to n_odd(profile.g) across all records: the
    fibers partition the odd spin curves of the reduced central fiber.
    """
    _require_no_nodes(profile)
    tau, gamma = profile.tau, profile.gamma
    records = []
    for i in range(tau + 1):
        for j in range(i + 1):
            for k in range(gamma + 1):
                pattern = tuple(range(1, j + 1)) + tuple(range(i + 1, tau + 1))
                fiber = 4 ** (i - j) * 6 ** j
                count = theta_count(profile, ThetaType(i, j, k))
                records.append(
                    TwistedSpinFiber(
                        i=i,
                        j=j,
                        k=k,
                        blown_up_tacnodes=pattern,
                        gluings=1 << (tau - i + j),
                        even_theta_choices=3 ** j,
                        tail_orbit=4 ** (i - j),
                        fiber_size=fiber,
                        cusp_multiplicity=3 ** k,
                        hyperplanes=count,
                        weighted=count * fiber * 3 ** k,
                    )
                )
    return records


@dataclass(frozen=True)
class TwisterEntry:
    """Square-root classes for one twister.

    The twisting divisor is the sum of all cusp tails and the listed tacnode
    tails (1-based indices).  The parity vector is the degree parity of the
    twisted dualizing sheaf; twisting by a tail shifts degrees by its number
    of attaching nodes on each side, so only cusp tails flip anything.
    """

    tacnode_subset: tuple[int, ...]
    parity: tuple[tuple[VertexId, int], ...]
    square_root_classes: int


@dataclass(frozen=True)
class SpinCurveCensus:
    total: int
    entries: tuple[TwisterEntry, ...]


def spin_curve_census(profile: CurveProfile) -> SpinCurveCensus:
    """Enumerate spin curves of the singular curve over its stable reduction.

    A twister adds every cusp tail and any subset of the tacnode tails; per
    twister we count the square roots of the twisted dualizing sheaf living
    on the reduced curve itself, which requires the twisted parity to vanish
    everywhere.  Subsets are visited in bitmask order.
    """
    _require_no_nodes(profile)
    red = reduction_graph(profile)
    graph = red.graph
    omega = graph.omega_parity()
    degree = {v: 0 for v in graph.vertex_ids}
    for a, b in graph.edges:
        if a != b:
            degree[a] += 1
            degree[b] += 1
    entries = []
    total = 0
    tau = len(red.tacnode_tails)
    for mask in range(1 << tau):
        subset = tuple(i + 1 for i in range(tau) if mask >> i & 1)
        twisted_tails = list(red.cusp_tails) + [
            red.tacnode_tails[i - 1] for i in subset
        ]
        parity = dict(omega)
        for tail in twisted_tails:
            parity[tail] = (parity[tail] + degree[tail]) % 2
            parity[red.center] = (parity[red.center] + degree[tail]) % 2
        if all(bit == 0 for bit in parity.values()):
            classes = root_census.class_count(graph, frozenset())
        else:
            classes = 0
        total += classes
        entries.append(
            TwisterEntry(
                tacnode_subset=subset,
                parity=tuple(parity.items()),
                square_root_classes=classes,
            )
        )
    return SpinCurveCensus(total=total, entries=tuple(entries))
