"""Independent brute-force verifiers.

Nothing here shares code with the closed-form paths it checks: admissible
edge subsets are found by sweeping all 2^|E| subsets, theta-characteristic
counts by classifying every quadratic form on GF(2)^(2g) through its Arf
invariant, and parity splits by an iterated two-state convolution.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .dual_graph import DualGraph, VertexId

__all__ = [
    "MAX_BRUTE_EDGES",
    "QuadraticForm",
    "brute_admissible",
    "arf",
    "zero_count",
    "arf_from_zeros",
    "arf_census",
    "parity_convolve",
]

MAX_BRUTE_EDGES = 24
MAX_ARF_GENUS = 6


def brute_admissible(
    graph: DualGraph, parity: Mapping[VertexId, int]
) -> list[frozenset[int]]:
    """All admissible edge subsets by exhaustive sweep over 2^|E| candidates.

    An edge subset is admissible when, at every vertex, the number of its
    non-loop edges there matches the parity bit mod 2 (loops meet their
    vertex twice and never change the count).  Guarded to small graphs; this
    is the ground truth the linear-algebra path is checked against.
    """
    m = len(graph.edges)
    if m > MAX_BRUTE_EDGES:
        raise ValueError(f"brute force refuses more than {MAX_BRUTE_EDGES} edges")
    if set(parity) != set(graph.vertex_ids):
        raise ValueError("parity vector domain does not match the vertex set")
    incidence = []
    for v in graph.vertex_ids:
        mask = 0
        for idx, (a, b) in enumerate(graph.edges):
            if a != b and (a == v or b == v):
                mask |= 1 << idx
        incidence.append((mask, parity[v] % 2))
    out = []
    for subset in range(1 << m):
        if all((subset & mask).bit_count() % 2 == bit for mask, bit in incidence):
            out.append(frozenset(i for i in range(m) if subset >> i & 1))
    return out


# ----------------------------------------------------------------------
# quadratic forms over GF(2)

@dataclass(frozen=True)
class QuadraticForm:
    """q(x) = sum_{i<g} x_i x_{g+i} + sum_m a_m x_m over GF(2).

    ``coefficients`` lists the 2g values a_m = q(e_m) on the standard basis.
    Every such q refines the standard symplectic pairing:
    q(x+y) + q(x) + q(y) = <x, y>.
    """

    g: int
    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) % 2 for c in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if self.g < 0:
            raise ValueError("g must be nonnegative")
        if len(coeffs) != 2 * self.g:
            raise ValueError("need exactly 2g basis values")

    @property
    def _linear_mask(self) -> int:
        mask = 0
        for m, a in enumerate(self.coefficients):
            mask |= a << m
        return mask

    def __call__(self, x: int) -> int:
        """Evaluate at the vector with bitmask x (bit m = coordinate x_m)."""
        low = (1 << self.g) - 1
        pair = (x & (x >> self.g) & low).bit_count()
        return (pair + (x & self._linear_mask).bit_count()) % 2


def arf(form: QuadraticForm) -> int:
    """Arf invariant sum_i q(e_i) q(f_i) over the symplectic basis pairs."""
    a = form.coefficients
    return sum(a[i] & a[form.g + i] for i in range(form.g)) % 2


def zero_count(form: QuadraticForm) -> int:
    """Number of zeros of the form, by evaluating all 2^(2g) vectors."""
    return sum(1 for x in range(1 << (2 * form.g)) if form(x) == 0)


def arf_from_zeros(form: QuadraticForm) -> int:
    """Classify the form by its zero count: arf 0 iff 2^(2g-1) + 2^(g-1) zeros."""
    g = form.g
    zeros = zero_count(form)
    if zeros == (1 << (2 * g - 1)) + (1 << (g - 1)):
        return 0
    if zeros == (1 << (2 * g - 1)) - (1 << (g - 1)):
        return 1
    raise AssertionError(f"impossible zero count {zeros} at g={g}")


def symplectic_pairing(g: int, x: int, y: int) -> int:
    """<x, y> = sum_i (x_i y_{g+i} + x_{g+i} y_i) over GF(2)."""
    low = (1 << g) - 1
    return ((x & (y >> g) & low).bit_count() + ((x >> g) & y & low).bit_count()) % 2


def arf_census(g: int) -> tuple[int, int]:
    """(odd, even) counts of quadratic forms over all 4^g coefficient vectors."""
    if not 1 <= g <= MAX_ARF_GENUS:
        raise ValueError(f"census supported for 1 <= g <= {MAX_ARF_GENUS}")
    odd = 0
    low = (1 << g) - 1
    for a in range(1 << (2 * g)):
        # arf = sum a_i a_{g+i}, directly on the coefficient bitmask
        odd += (a & (a >> g) & low).bit_count() % 2
    total = 1 << (2 * g)
    return odd, total - odd


def parity_convolve(components: Iterable[tuple[int, int]]) -> tuple[int, int]:
    """Combine per-component (odd, even) counts; a product is odd exactly
    when an odd number of factors is odd.

    An empty list yields (0, 1): the empty product is even.  Computed by an
    iterated two-state convolution, no division.
    """
    odd, even = 0, 1
    for o, e in components:
        odd, even = odd * e + even * o, even * e + odd * o
    return odd, even
