"""Command-line frontend.

Subcommands: ``depth`` (one depth query), ``adm list``/``adm check``
(admissible families and single subsets), ``verify`` (the exact
verification suites), ``table`` (depth grids as CSV/JSON).

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 budget
exceeded. All output is deterministic for a fixed configuration, including
the parallelism degree.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import admissible as adm
from . import depth as dp
from . import graphs as gr
from . import homology as ho
from . import ideals as idl
from .config import current_budgets
from .errors import (
    CoverDepthError,
    InfeasibleParameterError,
    InvalidParameterError,
    OutOfHypothesisError,
    SizeLimitError,
    UnsupportedInputError,
)

USAGE_ERRORS = (
    InvalidParameterError,
    UnsupportedInputError,
    OutOfHypothesisError,
    InfeasibleParameterError,
)


def _emit(text: str) -> None:
    sys.stdout.write(text + "\n")


def _parse_range(text: str) -> list[int]:
    """Parse '3..14' (inclusive) or a single integer; empty ranges error."""
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
        try:
            lo, hi = int(lo_s), int(hi_s)
        except ValueError as exc:
            raise InvalidParameterError(f"bad range {text!r}") from exc
    else:
        try:
            lo = hi = int(text)
        except ValueError as exc:
            raise InvalidParameterError(f"bad range {text!r}") from exc
    if hi < lo:
        raise InvalidParameterError(f"range {text!r} is empty")
    return list(range(lo, hi + 1))


def _fmt_cert(cert) -> str:
    if cert is None:
        return "-"
    return "u=" + ",".join(map(str, cert.u)) + ";v=" + ",".join(map(str, cert.v))


def _render_report(report: dp.DepthReport, fmt: str) -> None:
    if fmt == "json":
        _emit(json.dumps(report.to_json_dict(), indent=2))
        return
    witness = (
        ",".join(map(str, report.witness_edges)) if report.witness_edges is not None else "-"
    )
    _emit(
        f"graph={report.graph} t={report.t} depth={report.depth} "
        f"max_reg={report.max_reg} engine={report.engine} "
        f"witness_edges={witness} witness_certificate={_fmt_cert(report.witness_certificate)}"
    )


def cmd_depth(args) -> int:
    g, designator = gr.graph_from_designator(args.graph)
    report = dp.depth_symbolic(
        g,
        args.t,
        args.engine,
        designator=designator,
        parallelism=args.parallelism,
    )
    _render_report(report, args.format)
    return 0


def _family_for(graph_designator: str, t: int, engine: str, parallelism: int):
    g, designator = gr.graph_from_designator(graph_designator)
    layout = gr.cycle_layout(g)
    if engine == "certificate" and layout is None:
        raise InvalidParameterError("the certificate engine applies to cycles only")
    if layout is not None and engine in ("auto", "certificate"):
        base = adm.enumerate_admissible_cycle(g.n, t, parallelism=parallelism)
        members = base.members
        if not layout.is_identity:
            translated = [layout.edges_of_positions(m) for m in members]
            translated.sort(key=lambda m: (len(m), adm._indices_to_mask(m)))
            members = tuple(translated)
        family = adm.AdmissibleFamily(graph=g, designator=designator, t=t, members=members)
        return family, g, designator
    family = adm.enumerate_admissible_bruteforce(
        g, t, designator=designator, parallelism=parallelism
    )
    return family, g, designator


def cmd_adm(args) -> int:
    if args.action == "list":
        family, _, _ = _family_for(args.graph, args.t, args.engine, args.parallelism)
        if args.witnesses:
            witnesses = tuple(
                adm.is_admissible(family.graph, args.t, member) for member in family.members
            )
            family = adm.AdmissibleFamily(
                graph=family.graph,
                designator=family.designator,
                t=family.t,
                members=family.members,
                witnesses=witnesses,
            )
        if args.format == "json":
            _emit(json.dumps(family.to_json_dict(), indent=2))
        else:
            _emit(f"graph={family.designator} t={family.t} members={len(family)}")
            for member in family.members:
                _emit("  " + ",".join(map(str, member)))
        return 0

    # adm check
    if not args.edges:
        raise InvalidParameterError("adm check needs --edges")
    g, designator = gr.graph_from_designator(args.graph)
    edges = tuple(int(x) for x in args.edges.split(","))
    witness = adm.is_admissible(g, args.t, edges)
    if args.format == "json":
        _emit(
            json.dumps(
                {
                    "graph": designator,
                    "t": args.t,
                    "edges": list(edges),
                    "admissible": witness is not None,
                    "witness": list(witness) if witness is not None else None,
                },
                indent=2,
            )
        )
        return 0
    if witness is None:
        layout = gr.cycle_layout(g)
        note = ""
        if layout is not None and len(set(edges)) < len(g.edges):
            profile = gr.block_gap_decomposition(g.n, layout.positions_of_edges(edges))
            note = f" (no certificate for blocks={profile.blocks} gaps={profile.gaps})"
        _emit(f"graph={designator} t={args.t} edges={args.edges} not admissible{note}")
    else:
        _emit(
            f"graph={designator} t={args.t} edges={args.edges} admissible "
            f"witness=({','.join(map(str, witness))})"
        )
    return 0


def _verify_theorem_main(n_values, t_values, parallelism):
    cases = []
    for n in n_values:
        for t in t_values:
            report = dp.depth_symbolic(
                gr.make_cycle(n),
                t,
                "certificate",
                designator=f"cycle:{n}",
                parallelism=parallelism,
            )
            expected = dp.closed_form_depth_cycle(n, t)
            cases.append(
                {
                    "n": n,
                    "t": t,
                    "depth": report.depth,
                    "expected": expected,
                    "witness_edges": list(report.witness_edges),
                    "ok": report.depth == expected,
                }
            )
    return cases


def _verify_cross_engines(n_values, t_values, parallelism):
    cases = []
    for n in n_values:
        for t in t_values:
            certificate = adm.enumerate_admissible_cycle(n, t, parallelism=parallelism)
            brute = adm.enumerate_admissible_bruteforce(
                gr.make_cycle(n), t, designator=f"cycle:{n}", parallelism=parallelism
            )
            ok = certificate.members == brute.members
            case = {
                "n": n,
                "t": t,
                "count": len(certificate),
                "ok": ok,
            }
            if not ok:
                cert_set, brute_set = certificate.member_set(), brute.member_set()
                case["only_certificate"] = sorted(cert_set - brute_set)
                case["only_bruteforce"] = sorted(brute_set - cert_set)
            cases.append(case)
    return cases


def _verify_lemmas(max_n, max_t):
    cases = []

    for n in range(1, 16):
        g = gr.make_path(n)
        cases.append(
            {
                "check": "path-induced-matching",
                "n": n,
                "ok": gr.induced_matching_number(g) == gr.nu_path_closed_form(n),
            }
        )

    floor_ok = all(
        dp.check_floor_inequality(n, t) for n in range(3, 1001) for t in range(2, 51)
    )
    cases.append({"check": "floor-inequality", "n": 1000, "ok": floor_ok})

    for n in range(3, 11):
        reg = ho.reg_pd_hochster(idl.edge_ideal(gr.make_cycle(n)))[0]
        cases.append(
            {"check": "cycle-regularity", "n": n, "ok": reg == dp.reg_cycle(n)}
        )

    for n in range(3, max_n + 1):
        for t in range(1, max_t + 1):
            family = adm.enumerate_admissible_cycle(n, t)
            realizable = {
                gr.block_gap_decomposition(n, member).blocks
                for member in family.members
                if len(member) < n
            }
            ok = True
            for blocks in sorted(realizable):
                for i, size in enumerate(blocks, start=1):
                    if size >= 4:
                        ok = ok and adm.is_realizable(n, t, adm.reduce_block_ge4(blocks, i))
                    elif size >= 2:
                        ok = ok and adm.is_realizable(n, t, adm.reduce_block_2or3(blocks, i))
            cases.append({"check": "block-reductions", "n": n, "t": t, "ok": ok})

    for n in range(3, 21):
        for t in range(1, 6):
            edges, cert = adm.build_ones_configuration(n, t)
            expected = (t * n) // (2 * t + 1)
            g = gr.make_cycle(n)
            witness = adm.is_admissible(g, t, edges)
            ok = (
                len(edges) == expected
                and witness is not None
                and adm.witness_classifies(g, t, edges, witness)
            )
            cases.append(
                {"check": "ones-configuration", "n": n, "t": t, "edges": list(edges), "ok": ok}
            )

    budget = current_budgets()
    for t in range(1, (max_n - 2) // 2 + 1):
        for n in range(2 * t + 2, max_n + 1):
            chain = tuple(range(1, 2 * t + 2, 2))  # t+1 alternating edges
            g = gr.make_cycle(n)
            ok = adm.is_admissible(g, t, chain) is None
            if (t + 1) ** n <= budget.box_evaluations and n == 2 * t + 2:
                low = adm.box_low_masks(g, t)
                target = sum(1 << (i - 1) for i in chain)
                ok = ok and target not in set(low)
            cases.append(
                {"check": "chain-bound", "n": n, "t": t, "edges": list(chain), "ok": ok}
            )

    return cases


def _verify_oracle(forest_samples):
    import random

    cases = []
    for n in range(3, 11):
        reg = ho.reg_pd_hochster(idl.edge_ideal(gr.make_cycle(n)))[0]
        cases.append({"check": "cycle-regularity", "n": n, "ok": reg == dp.reg_cycle(n)})

    rng = random.Random(20260810)
    produced = 0
    while produced < forest_samples:
        n = rng.randint(2, 9)
        g = _random_forest(rng, n)
        if not g.edges:
            continue
        produced += 1
        reg = ho.reg_pd_hochster(idl.edge_ideal(g))[0]
        cases.append(
            {
                "check": "forest-regularity",
                "n": g.n,
                "edges": len(g.edges),
                "ok": reg == dp.reg_forest(g),
            }
        )

    for n, t in ((3, 2), (4, 2), (5, 2), (3, 3)):
        ideal = idl.expand_generators(idl.symbolic_cover_power(gr.make_cycle(n), t))
        value = ho.depth_via_polarization(ideal)
        cases.append(
            {
                "check": "polarization-depth",
                "n": n,
                "t": t,
                "ok": value == dp.closed_form_depth_cycle(n, t),
            }
        )
    for n in (3, 4, 5):
        ideal = idl.expand_generators(idl.symbolic_cover_power(gr.make_cycle(n), 1))
        value = ho.depth_via_polarization(ideal)
        cases.append(
            {
                "check": "polarization-depth",
                "n": n,
                "t": 1,
                "ok": value == n - dp.reg_cycle(n),
            }
        )
    return cases


def _random_forest(rng, n: int) -> gr.Graph:
    """A random labeled forest on 1..n with at least one edge when n >= 2."""
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = []
    target = rng.randint(1, n - 1)
    attempts = 0
    while len(edges) < target and attempts < 10 * n * n:
        attempts += 1
        u, v = rng.randint(1, n), rng.randint(1, n)
        if u == v:
            continue
        ru, rv = find(u), find(v)
        if ru == rv:
            continue
        parent[ru] = rv
        edges.append((u, v))
    return gr.Graph(n, tuple(edges))


def cmd_verify(args) -> int:
    parallelism = args.parallelism
    if args.suite == "theorem-main":
        n_values = _parse_range(args.n or "3..14")
        t_values = _parse_range(args.t or "2..4")
        cases = _verify_theorem_main(n_values, t_values, parallelism)
    elif args.suite == "cross-engines":
        n_values = _parse_range(args.n or "3..8")
        t_values = _parse_range(args.t or "1..3")
        cases = _verify_cross_engines(n_values, t_values, parallelism)
    elif args.suite == "lemmas":
        max_n = _parse_range(args.n or "3..12")[-1]
        max_t = _parse_range(args.t or "1..3")[-1]
        cases = _verify_lemmas(max_n, max_t)
    elif args.suite == "oracle":
        cases = _verify_oracle(args.forests)
    else:  # pragma: no cover - argparse restricts choices
        raise InvalidParameterError(f"unknown suite {args.suite!r}")

    passed = all(case["ok"] for case in cases)
    report = {
        "suite": args.suite,
        "checked": len(cases),
        "pass": passed,
        "cases": cases,
    }
    if args.format == "json":
        _emit(json.dumps(report, indent=2))
    else:
        for case in cases:
            detail = " ".join(f"{k}={v}" for k, v in case.items() if k != "ok")
            _emit(("ok   " if case["ok"] else "FAIL ") + detail)
        _emit(f"{'PASS' if passed else 'FAIL'} {args.suite}: {len(cases)} cases")
    return 0 if passed else 1


def cmd_table(args) -> int:
    n_values = _parse_range(args.n)
    t_values = _parse_range(args.t)
    reports = []
    for n in n_values:
        for t in t_values:
            reports.append(
                dp.depth_symbolic(
                    gr.make_cycle(n),
                    t,
                    args.engine,
                    designator=f"cycle:{n}",
                    parallelism=args.parallelism,
                )
            )
    if args.format == "json":
        _emit(json.dumps([r.to_json_dict() for r in reports], indent=2))
    else:
        _emit("n,t,depth,engine")
        for r in reports:
            n = int(r.graph.split(":", 1)[1])
            _emit(f"{n},{r.t},{r.depth},{r.engine}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coverdepth",
        description="Exact depth of symbolic powers of graph cover ideals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_depth = sub.add_parser("depth", help="depth of one symbolic cover power")
    p_depth.add_argument("--graph", required=True, help="cycle:N, path:N, or a graph file")
    p_depth.add_argument("--t", type=int, required=True)
    p_depth.add_argument("--engine", default="auto", choices=("auto",) + dp.ENGINES)
    p_depth.add_argument("--format", default="human", choices=("human", "json"))
    p_depth.add_argument("--parallelism", type=int, default=1)
    p_depth.set_defaults(func=cmd_depth)

    p_adm = sub.add_parser("adm", help="admissible subgraph families")
    p_adm.add_argument("action", choices=("list", "check"))
    p_adm.add_argument("--graph", required=True)
    p_adm.add_argument("--t", type=int, required=True)
    p_adm.add_argument("--edges", help="comma-separated edge indices (check)")
    p_adm.add_argument("--engine", default="auto", choices=("auto", "certificate", "bruteforce"))
    p_adm.add_argument("--witnesses", action="store_true", help="attach witnesses (list)")
    p_adm.add_argument("--format", default="human", choices=("human", "json"))
    p_adm.add_argument("--parallelism", type=int, default=1)
    p_adm.set_defaults(func=cmd_adm)

    p_verify = sub.add_parser("verify", help="exact verification suites")
    p_verify.add_argument(
        "suite", choices=("theorem-main", "cross-engines", "lemmas", "oracle")
    )
    p_verify.add_argument("--n", help="range like 3..14")
    p_verify.add_argument("--t", help="range like 2..4")
    p_verify.add_argument("--forests", type=int, default=200, help="forest sample size (oracle)")
    p_verify.add_argument("--format", default="human", choices=("human", "json"))
    p_verify.add_argument("--parallelism", type=int, default=1)
    p_verify.set_defaults(func=cmd_verify)

    p_table = sub.add_parser("table", help="depth grid over (n, t)")
    p_table.add_argument("--n", required=True)
    p_table.add_argument("--t", required=True)
    p_table.add_argument("--engine", default="certificate", choices=dp.ENGINES)
    p_table.add_argument("--format", default="csv", choices=("csv", "json"))
    p_table.add_argument("--parallelism", type=int, default=1)
    p_table.set_defaults(func=cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CoverDepthError as exc:  # pragma: no cover - safety net
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
