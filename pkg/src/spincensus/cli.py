"""Command-line front end: censuses, graph ingestion and verification suites.

Output is byte-identical across runs for the same input: all arithmetic is
exact, numbers render in full decimal, and every enumeration has a fixed
order.  The environment variable SPIN_CENSUS_THREADS (a positive integer)
caps internal parallelism in the verification sweeps.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence

from . import corpus, oracle, reduction, root_census, theta_counts
from .dual_graph import DualGraph, graph_from_json, graph_to_dot, graph_to_json


def _thread_cap() -> int:
    raw = os.environ.get("SPIN_CENSUS_THREADS")
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n < 1:
        raise ValueError("SPIN_CENSUS_THREADS must be a positive integer")
    return n


def _map_ordered(fn: Callable, items: Sequence) -> list:
    """Apply fn across items, optionally on a capped thread pool; order kept."""
    cap = _thread_cap()
    if cap == 1 or len(items) < 2:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=cap) as pool:
        return list(pool.map(fn, items))


def _table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = ["  ".join(h.rjust(w) for h, w in zip(headers, widths))]
    for row in rows:
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    return "\n".join(lines)


# ----------------------------------------------------------------------
# census

def cmd_census(args: argparse.Namespace) -> int:
    if args.genus < 3:
        raise ValueError("genus must be at least 3")
    profile = theta_counts.CurveProfile(
        args.genus, args.tacnodes, args.cusps, args.nodes
    )
    rows = theta_counts.census(profile)
    report = (
        theta_counts.identity_check(profile) if profile.delta == 0 else None
    )

    if args.format == "csv":
        print("i,j,k,h,count,multiplicity,weighted")
        for row in rows:
            mult = "" if row.multiplicity is None else str(row.multiplicity)
            weighted = "" if row.weighted is None else str(row.weighted)
            print(f"{row.kind.i},{row.kind.j},{row.kind.k},{row.kind.h},{row.count},{mult},{weighted}")
    elif args.format == "json":
        obj = {
            "profile": {
                "g": profile.g,
                "tau": profile.tau,
                "gamma": profile.gamma,
                "delta": profile.delta,
            },
            "rows": [
                {
                    "i": row.kind.i,
                    "j": row.kind.j,
                    "k": row.kind.k,
                    "h": row.kind.h,
                    "count": row.count,
                    "multiplicity": row.multiplicity,
                    "weighted": row.weighted,
                }
                for row in rows
            ],
            "identity": None
            if report is None
            else {"lhs": report.lhs, "rhs": report.rhs, "ok": report.ok},
        }
        print(json.dumps(obj, indent=2))
    else:
        print(
            f"theta hyperplane census: genus {profile.g}, "
            f"tacnodes {profile.tau}, cusps {profile.gamma}, nodes {profile.delta}"
        )
        body = [
            [
                str(row.kind.i),
                str(row.kind.j),
                str(row.kind.k),
                str(row.kind.h),
                str(row.count),
                "-" if row.multiplicity is None else str(row.multiplicity),
                "-" if row.weighted is None else str(row.weighted),
            ]
            for row in rows
        ]
        print(_table(["i", "j", "k", "h", "count", "multiplicity", "weighted"], body))
        if report is None:
            print("identity unavailable: no multiplicity for hyperplanes through nodes")
        else:
            verdict = "OK" if report.ok else "FAIL"
            print(
                f"identity: weighted total {report.lhs} vs odd theta count {report.rhs} [{verdict}]"
            )
    if report is not None and not report.ok:
        return 1
    return 0


# ----------------------------------------------------------------------
# roots

def _parse_parity(spec: str, graph: DualGraph) -> dict:
    if spec == "omega":
        return graph.omega_parity()
    try:
        bits = [int(b) for b in spec.split(",")]
    except ValueError:
        raise ValueError(f"parity must be 'omega' or comma-separated bits, got {spec!r}")
    if len(bits) != len(graph.vertices):
        raise ValueError(
            f"parity has {len(bits)} bits but the graph has {len(graph.vertices)} vertices"
        )
    if any(b not in (0, 1) for b in bits):
        raise ValueError("parity bits must be 0 or 1")
    return {v: b for v, b in zip(graph.vertex_ids, bits)}


def cmd_roots(args: argparse.Namespace) -> int:
    try:
        with open(args.graph, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ValueError(f"cannot read graph file: {exc}")
    graph = graph_from_json(text)
    parity = _parse_parity(args.parity, graph)
    is_canonical = parity == graph.omega_parity()
    entries = root_census.full_census(graph, parity)
    weighted_total = sum(e.multiplicity * e.class_count for e in entries)
    expected = 4 ** graph.arithmetic_genus() if is_canonical else None

    if args.format == "csv":
        print("support_bitmask,class_count,multiplicity,odd,even,parity_model")
        for e in entries:
            print(
                f"{e.support_mask},{e.class_count},{e.multiplicity},{e.odd},{e.even},{e.parity_model.value}"
            )
    elif args.format == "json":
        obj = {
            "parity": args.parity,
            "entries": [
                {
                    "support_bitmask": e.support_mask,
                    "class_count": e.class_count,
                    "multiplicity": e.multiplicity,
                    "odd": e.odd,
                    "even": e.even,
                    "parity_model": e.parity_model.value,
                }
                for e in entries
            ],
            "weighted_total": weighted_total,
            "expected_total": expected,
        }
        print(json.dumps(obj, indent=2))
    else:
        if not entries:
            print("no admissible subgraphs")
            return 0
        body = [
            [
                str(e.support_mask),
                str(e.class_count),
                str(e.multiplicity),
                str(e.odd),
                str(e.even),
                e.parity_model.value,
            ]
            for e in entries
        ]
        print(
            _table(
                ["support_bitmask", "class_count", "multiplicity", "odd", "even", "parity_model"],
                body,
            )
        )
        if is_canonical:
            verdict = "OK" if weighted_total == expected else "FAIL"
            print(
                f"weighted total: {weighted_total} vs 4^genus = {expected} [{verdict}]"
            )
    if is_canonical and weighted_total != expected:
        return 1
    return 0


# ----------------------------------------------------------------------
# reduce

def cmd_reduce(args: argparse.Namespace) -> int:
    if args.genus < 3:
        raise ValueError("genus must be at least 3")
    profile = theta_counts.CurveProfile(args.genus, args.tacnodes, args.cusps, 0)
    red = reduction.reduction_graph(profile)
    orders = reduction.base_change_orders(profile)
    fibers = reduction.twisted_fibers(profile)
    total = sum(f.weighted for f in fibers)
    expected = theta_counts.n_odd(profile.g)
    tail_attrs = {v: {"tail": kind} for v, kind in red.tail_kinds().items()}

    if args.format == "dot":
        sys.stdout.write(graph_to_dot(red.graph, node_attrs=tail_attrs))
    elif args.format == "json":
        obj = {
            "graph": json.loads(graph_to_json(red.graph)),
            "base_change": {
                "cusp": orders.cusp,
                "tacnode": orders.tacnode,
                "combined": orders.combined,
            },
            "fibers": [
                {
                    "type": {"i": f.i, "j": f.j, "k": f.k},
                    "t": f.hyperplanes,
                    "fiber_size": f.fiber_size,
                    "weighted": f.weighted,
                }
                for f in fibers
            ],
            "total": total,
            "expected": expected,
        }
        print(json.dumps(obj, indent=2))
    elif args.format == "csv":
        print("i,j,k,t,fiber_size,weighted")
        for f in fibers:
            print(f"{f.i},{f.j},{f.k},{f.hyperplanes},{f.fiber_size},{f.weighted}")
    else:
        print(
            f"stable reduction: genus {profile.g} = center {profile.normalization_genus}"
            f" + {profile.gamma} cusp tail(s) + {profile.tau} tacnode tail(s)"
        )
        print(f"base change order: {orders.combined}")
        body = [
            [
                str(f.i),
                str(f.j),
                str(f.k),
                str(f.hyperplanes),
                str(f.fiber_size),
                str(f.cusp_multiplicity),
                str(f.weighted),
            ]
            for f in fibers
        ]
        print(
            _table(
                ["i", "j", "k", "hyperplanes", "fiber_size", "cusp_mult", "weighted"],
                body,
            )
        )
        verdict = "OK" if total == expected else "FAIL"
        print(f"partition: weighted total {total} vs odd theta count {expected} [{verdict}]")
    return 0 if total == expected else 1


# ----------------------------------------------------------------------
# verify

Check = tuple[str, bool, str]


def _verify_arf() -> list[Check]:
    checks: list[Check] = []
    for g in range(1, 7):
        odd, even = oracle.arf_census(g)
        ok = (odd, even) == (theta_counts.n_odd(g), theta_counts.n_even(g))
        checks.append((f"arf census g={g}", ok, f"odd={odd} even={even}"))
    ok = True
    for a in range(0, 7):
        for b in range(0, 7 - a):
            if a + b < 1:
                continue
            combined = oracle.parity_convolve(
                [
                    (theta_counts.n_odd(a), theta_counts.n_even(a)),
                    (theta_counts.n_odd(b), theta_counts.n_even(b)),
                ]
            )
            if combined != oracle.arf_census(a + b):
                ok = False
    checks.append(("parity convolution multiplicative", ok, "a+b <= 6"))
    ok = True
    for g in range(1, 4):
        for coeffs in range(1 << (2 * g)):
            form = oracle.QuadraticForm(g, tuple(coeffs >> m & 1 for m in range(2 * g)))
            if oracle.arf(form) != oracle.arf_from_zeros(form):
                ok = False
    checks.append(("arf basis formula matches zero counting", ok, "g <= 3"))
    return checks


def _check_graph_against_brute(graph: DualGraph) -> bool:
    omega = graph.omega_parity()
    fast = root_census.admissible_subgraphs(graph, omega)
    slow = oracle.brute_admissible(graph, omega)
    if set(fast) != set(slow):
        return False
    count = root_census.count_admissible(graph, omega)
    if count != len(fast) or count not in (0, 1 << graph.betti1()):
        return False
    weighted = sum(
        root_census.support_multiplicity(graph, s) * root_census.class_count(graph, s)
        for s in fast
    )
    return weighted == 4 ** graph.arithmetic_genus()


def _verify_admissible() -> list[Check]:
    checks: list[Check] = []
    exhaustive = list(corpus.connected_multigraphs(4))
    results = _map_ordered(_check_graph_against_brute, exhaustive)
    checks.append(
        (
            "admissible subgraphs vs brute force (exhaustive)",
            all(results),
            f"{len(exhaustive)} connected multigraphs, <= 4 edges",
        )
    )
    randoms = corpus.random_corpus(200)
    results = _map_ordered(_check_graph_against_brute, randoms)
    checks.append(
        (
            "admissible subgraphs vs brute force (random)",
            all(results),
            f"{len(randoms)} multigraphs, <= 12 edges",
        )
    )
    ok = True
    for n in range(1, 7):
        graph = corpus.double_edge_star(n)
        family = set(root_census.admissible_subgraphs(graph, graph.omega_parity()))
        expected = set()
        for mask in range(1 << n):
            chosen = frozenset(
                idx
                for pair in range(n)
                if mask >> pair & 1
                for idx in (2 * pair, 2 * pair + 1)
            )
            expected.add(chosen)
        if family != expected:
            ok = False
        for r in range(n + 1):
            support = frozenset(range(2 * r))
            if root_census.support_multiplicity(graph, support) != 1 << r:
                ok = False
    checks.append(
        ("double-edge star family and 2^r multiplicities", ok, "N = 1..6, r <= N")
    )
    return checks


def _verify_identity() -> list[Check]:
    checks: list[Check] = []
    ok = True
    n_profiles = 0
    for g in range(3, 13):
        for tau in range(g // 2 + 1):
            for gamma in range(g - 2 * tau + 1):
                profile = theta_counts.CurveProfile(g, tau, gamma, 0)
                n_profiles += 1
                if not theta_counts.identity_check(profile).ok:
                    ok = False
    checks.append(
        ("weighted census identity", ok, f"{n_profiles} node-free profiles, g <= 12")
    )
    ok = True
    for g in range(4, 13):
        lhs = theta_counts.identity_check(theta_counts.CurveProfile(g, 1, 1, 0)).lhs
        rhs = 36 * theta_counts.n_odd(g - 3) + 28 * theta_counts.n_even(g - 3)
        if lhs != rhs:
            ok = False
    checks.append(
        ("one tacnode + one cusp closed form", ok, "36*N(g-3) + 28*N+(g-3), g <= 12")
    )
    rows = theta_counts.census(theta_counts.CurveProfile(4, 1, 1, 0))
    counts = tuple(row.count for row in rows)
    weighted = sum(row.weighted for row in rows)
    ok = counts == (2, 6, 4, 4, 3, 1) and weighted == 120
    checks.append(("genus-4 table", ok, f"counts={counts} weighted={weighted}"))
    return checks


def _verify_reduction() -> list[Check]:
    checks: list[Check] = []
    ok = True
    for tau in range(5):
        for gamma in range(5):
            for gt in range(5):
                g = gt + gamma + 2 * tau
                red = reduction.reduction_graph(
                    theta_counts.CurveProfile(g, tau, gamma, 0)
                )
                if red.graph.arithmetic_genus() != g:
                    ok = False
    checks.append(("reduction graph genus", ok, "tau, gamma, gt <= 4"))
    ok = True
    cusp_only_ok = True
    for tau in range(4):
        for gamma in range(4):
            for gt in range(7):
                g = gt + gamma + 2 * tau
                red = reduction.reduction_graph(
                    theta_counts.CurveProfile(g, tau, gamma, 0)
                )
                entries = root_census.full_census(
                    red.graph, red.graph.omega_parity()
                )
                weighted_odd = sum(e.multiplicity * e.odd for e in entries)
                if weighted_odd != theta_counts.n_odd(g):
                    ok = False
                if tau == 0 and gamma > 0:
                    all_edges = frozenset(range(len(red.graph.edges)))
                    if (
                        len(entries) != 1
                        or entries[0].support != all_edges
                        or entries[0].multiplicity != 1
                        or entries[0].odd != theta_counts.n_odd(g)
                    ):
                        cusp_only_ok = False
    checks.append(("weighted odd census on reductions", ok, "tau, gamma <= 3, gt <= 6"))
    checks.append(
        ("cusp-only case forces the fully blown-up support", cusp_only_ok, "odd = N_g at multiplicity 1")
    )
    group = reduction.tail_automorphisms()
    ok = (
        group.is_klein_four()
        and all(group.orbit(d) == frozenset(reduction.ROOT_LABELS) for d in reduction.ROOT_LABELS)
        and group.branch_swap == {"D1": "D3", "D3": "D1", "D2": "D4", "D4": "D2"}
        and group.cover_involution == {"D1": "D2", "D2": "D1", "D3": "D4", "D4": "D3"}
    )
    checks.append(("tail automorphism group", ok, "transitive Klein four-group"))
    orders = [
        reduction.base_change_orders(theta_counts.CurveProfile(5, 0, 2, 0)).combined,
        reduction.base_change_orders(theta_counts.CurveProfile(5, 1, 0, 0)).combined,
        reduction.base_change_orders(theta_counts.CurveProfile(5, 1, 1, 0)).combined,
    ]
    checks.append(("base change orders", orders == [6, 4, 12], f"{orders}"))
    ok = True
    for tau in range(3):
        for gamma in range(3):
            for gt in range(4):
                g = gt + gamma + 2 * tau
                total = reduction.spin_curve_census(
                    theta_counts.CurveProfile(g, tau, gamma, 0)
                ).total
                if total != 4 ** g:
                    ok = False
    checks.append(("twister census total is 4^g", ok, "tau, gamma <= 2, gt <= 3"))
    return checks


_SUITES = {
    "arf": _verify_arf,
    "admissible": _verify_admissible,
    "identity": _verify_identity,
    "reduction": _verify_reduction,
}


def cmd_verify(args: argparse.Namespace) -> int:
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    checks: list[Check] = []
    for name in names:
        checks.extend(_SUITES[name]())
    for name, ok, detail in checks:
        print(f"{'PASS' if ok else 'FAIL'} {name} ({detail})")
    failed = sum(1 for _, ok, _ in checks if not ok)
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return 0 if failed == 0 else 1


# ----------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spincensus",
        description="Exact censuses of theta characteristics, limit square roots "
        "and theta hyperplanes on dual graphs of singular curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_census = sub.add_parser("census", help="theta hyperplane census by type")
    p_census.add_argument("-g", "--genus", type=int, required=True)
    p_census.add_argument("--tacnodes", type=int, default=0)
    p_census.add_argument("--cusps", type=int, default=0)
    p_census.add_argument("--nodes", type=int, default=0)
    p_census.add_argument("--format", choices=["table", "csv", "json"], default="table")
    p_census.set_defaults(func=cmd_census)

    p_roots = sub.add_parser("roots", help="limit square root census of a graph file")
    p_roots.add_argument("--graph", required=True, help="path to a JSON graph file")
    p_roots.add_argument(
        "--parity",
        default="omega",
        help="'omega' for the canonical parity or comma-separated bits per vertex",
    )
    p_roots.add_argument("--format", choices=["table", "csv", "json"], default="table")
    p_roots.set_defaults(func=cmd_roots)

    p_reduce = sub.add_parser("reduce", help="stable reduction graph and fiber report")
    p_reduce.add_argument("-g", "--genus", type=int, required=True)
    p_reduce.add_argument("--tacnodes", type=int, default=0)
    p_reduce.add_argument("--cusps", type=int, default=0)
    p_reduce.add_argument(
        "--format", choices=["table", "csv", "json", "dot"], default="table"
    )
    p_reduce.set_defaults(func=cmd_reduce)

    p_verify = sub.add_parser("verify", help="run the verification suites")
    p_verify.add_argument(
        "suite",
        nargs="?",
        default="all",
        choices=["arf", "admissible", "identity", "reduction", "all"],
    )
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
