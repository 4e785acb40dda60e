"""Closed-form counts: theta characteristics and theta hyperplane censuses.

All arithmetic is exact and unbounded.  ``n_odd``/``n_even`` are the classic
counts for a smooth curve of genus g, ``harris_nodal_odd`` the odd count for
an irreducible nodal curve, and ``theta_count`` the census of theta
hyperplanes by type on a general irreducible canonical curve with tacnodes,
cusps and nodes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

__all__ = [
    "CurveProfile",
    "ThetaType",
    "CensusRow",
    "IdentityReport",
    "n_odd",
    "n_even",
    "harris_nodal_odd",
    "theta_count",
    "theta_multiplicity",
    "census",
    "identity_check",
]


def _comb(n: int, k: int) -> int:
    # out-of-range arguments count zero ways, which keeps the census total
    return math.comb(n, k) if 0 <= k <= n else 0


def n_odd(g: int) -> int:
    """Number of odd theta characteristics of a smooth genus-g curve."""
    if g < 0:
        raise ValueError("genus must be nonnegative")
    return 0 if g == 0 else (1 << (g - 1)) * ((1 << g) - 1)


def n_even(g: int) -> int:
    """Number of even theta characteristics of a smooth genus-g curve."""
    if g < 0:
        raise ValueError("genus must be nonnegative")
    return 1 if g == 0 else (1 << (g - 1)) * ((1 << g) + 1)


def harris_nodal_odd(g_nu: int, k: int) -> int:
    """Odd theta characteristics of an irreducible curve with k >= 1 nodes.

    ``g_nu`` is the genus of the normalization.  The count is exactly half
    of the 2^(2*g_nu + k) theta characteristics; the smooth case k = 0 is
    different and handled by :func:`n_odd`.
    """
    if g_nu < 0:
        raise ValueError("normalization genus must be nonnegative")
    if k < 1:
        raise ValueError("at least one node required; use n_odd for smooth curves")
    return 1 << (2 * g_nu + k - 1)


@dataclass(frozen=True)
class CurveProfile:
    """Singularity profile (g, tau, gamma, delta) of an irreducible curve.

    g is the arithmetic genus, tau/gamma/delta the numbers of tacnodes,
    cusps and nodes.  The genus of the normalization,
    g - delta - gamma - 2*tau, must be nonnegative.
    """

    g: int
    tau: int = 0
    gamma: int = 0
    delta: int = 0

    def __post_init__(self) -> None:
        for name in ("g", "tau", "gamma", "delta"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be nonnegative")
        if self.normalization_genus < 0:
            raise ValueError(
                "normalization genus g - delta - gamma - 2*tau is negative"
            )

    @property
    def normalization_genus(self) -> int:
        return self.g - self.delta - self.gamma - 2 * self.tau


@dataclass(frozen=True)
class ThetaType:
    """Hyperplane type (i, j, k, h): contained tacnodes, tacnodal tangents,
    cusps and nodes."""

    i: int
    j: int
    k: int
    h: int = 0

    def __post_init__(self) -> None:
        if min(self.i, self.j, self.k, self.h) < 0:
            raise ValueError("type entries must be nonnegative")
        if self.j > self.i:
            raise ValueError("tangent count j cannot exceed tacnode count i")


@dataclass(frozen=True)
class CensusRow:
    kind: ThetaType
    count: int
    multiplicity: int | None

    @property
    def weighted(self) -> int | None:
        return None if self.multiplicity is None else self.count * self.multiplicity


class IdentityReport(NamedTuple):
    lhs: int
    rhs: int
    ok: bool


def _check_bounds(profile: CurveProfile, kind: ThetaType) -> None:
    if profile.g < 3:
        raise ValueError("genus must be at least 3")
    if kind.i > profile.tau or kind.k > profile.gamma or kind.h > profile.delta:
        raise ValueError(f"type {kind} out of bounds for profile {profile}")


def theta_count(profile: CurveProfile, kind: ThetaType) -> int:
    """Number of theta hyperplanes of the given type.

    Hyperplanes missing a tangent or a node come in free pencils of gluings;
    the remaining case reduces to the odd/even count of the normalization,
    with the parity decided by the unused tacnodes and cusps.
    """
    _check_bounds(profile, kind)
    gt = profile.normalization_genus
    i, j, k, h = kind.i, kind.j, kind.k, kind.h
    tau, gamma, delta = profile.tau, profile.gamma, profile.delta
    if j < i or h != delta:
        exponent = 2 * gt + (tau - j) + (delta - h) - 1
        ways = _comb(tau, i) * _comb(i, j) * _comb(gamma, k) * _comb(delta, h)
        return (1 << exponent) * ways
    ways = _comb(tau, i) * _comb(gamma, k)
    base = n_odd(gt) if (tau - i + gamma - k) % 2 == 0 else n_even(gt)
    return (1 << (tau - i)) * ways * base


def theta_multiplicity(kind: ThetaType) -> int:
    """Multiplicity 4^(i-j) * 6^j * 3^k of a hyperplane through tacnodes and cusps.

    No multiplicity is defined for hyperplanes through nodes (h > 0).
    """
    if kind.h > 0:
        raise ValueError(
            "multiplicity undefined for hyperplane types through nodes (h > 0)"
        )
    return 4 ** (kind.i - kind.j) * 6 ** kind.j * 3 ** kind.k


def census(profile: CurveProfile) -> list[CensusRow]:
    """All census rows in lexicographic (i, j, k, h) order.

    The multiplicity column is populated only for types away from nodes.
    """
    rows = []
    for i in range(profile.tau + 1):
        for j in range(i + 1):
            for k in range(profile.gamma + 1):
                for h in range(profile.delta + 1):
                    kind = ThetaType(i, j, k, h)
                    mult = theta_multiplicity(kind) if h == 0 else None
                    rows.append(CensusRow(kind, theta_count(profile, kind), mult))
    return rows


def identity_check(profile: CurveProfile) -> IdentityReport:
    """Compare the multiplicity-weighted census total with n_odd(g).

    Only defined away from nodes (delta = 0), where every row carries a
    multiplicity.
    """
    if profile.delta != 0:
        raise ValueError("identity check requires a profile without nodes")
    lhs = sum(row.weighted for row in census(profile))
    rhs = n_odd(profile.g)
    return IdentityReport(lhs, rhs, lhs == rhs)
