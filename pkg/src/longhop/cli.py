"""Command-line frontend.

Subcommands: bisect, mindist, convert, optimize, routes, ftable, cluster,
compare, verify.  Exit codes: 0 success, 1 input error, 2 infeasibility.
Data output is deterministic: identical inputs produce byte-identical
output, integers print exactly, reals with 6 decimals.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import codes, compare as cmp_mod, construct, gf2, optimize, routing, topology

MAX_LISTED_ARGMIN = 64


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad usage; remap to input-error code 1
    def error(self, message: str):
        raise _UsageError(message)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc.strerror}") from exc


def _write_output(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_topology(path: str, allow_large: bool) -> tuple[topology.CayleyTopology, int]:
    t = topology.parse_hopset(_read(path))
    max_d = topology.HARD_MAX_D if allow_large else topology.DEFAULT_MAX_D
    return t, max_d


def _cmd_bisect(args) -> int:
    t, max_d = _load_topology(args.hopfile, args.allow_large)
    if args.method == "scan":
        spectrum_result = topology.bisection_scan(t, max_d=max_d)
    else:
        spectrum_result = topology.bisection_fwht(t, max_d=max_d)
    argmin = [int(r) for r in spectrum_result.argmin_rs]
    shown = [gf2.word_to_text(r, t.d) for r in argmin[:MAX_LISTED_ARGMIN]]
    extra = len(argmin) - len(shown)
    if args.format == "json":
        payload = {
            "d": t.d,
            "m": t.m,
            "N": t.N,
            "b": spectrum_result.b,
            "B_links": spectrum_result.links,
            "argmin_r": shown,
            "argmin_count": len(argmin),
        }
        if args.spectrum:
            payload["cuts"] = [int(c) for c in spectrum_result.cuts]
            payload["alphas"] = [int(a) for a in spectrum_result.alphas]
        _write_output(json.dumps(payload, indent=2) + "\n", args.output)
        return 0
    lines = [
        f"d: {t.d}",
        f"m: {t.m}",
        f"N: {t.N}",
        f"b: {spectrum_result.b}",
        f"B_links: {spectrum_result.links}",
        "argmin_r: " + ",".join(shown) + (f" (+{extra} more)" if extra > 0 else ""),
    ]
    if args.spectrum:
        lines.append("r cut alpha")
        for r in range(t.N):
            lines.append(
                f"{gf2.word_to_text(r, t.d)} {int(spectrum_result.cuts[r])} {int(spectrum_result.alphas[r])}"
            )
    _write_output("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_mindist(args) -> int:
    g = codes.parse_generator(_read(args.genfile))
    delta = codes.min_distance(g, limit=args.limit)
    if args.format == "json":
        _write_output(
            json.dumps({"n": g.n, "k": g.k, "min_distance": delta}, indent=2) + "\n",
            args.output,
        )
    else:
        _write_output(f"n: {g.n}\nk: {g.k}\nmin_distance: {delta}\n", args.output)
    return 0


def _cmd_convert(args) -> int:
    if args.to_hops:
        g = codes.parse_generator(_read(args.infile))
        t = construct.code_to_network(g)
        _write_output(topology.emit_hopset(t), args.output)
    else:
        t = topology.parse_hopset(_read(args.infile))
        g = construct.network_to_code(t)
        _write_output(codes.emit_generator(g), args.output)
    return 0


def _cmd_optimize(args) -> int:
    if args.method == "brute":
        report = optimize.brute_force_search(args.d, args.m)
    else:
        if args.start:
            start = topology.parse_hopset(_read(args.start))
            if (start.d, start.m) != (args.d, args.m):
                raise ValueError(
                    f"start hop set is (d={start.d}, m={start.m}),"
                    f" expected (d={args.d}, m={args.m})"
                )
        else:
            basis = [1 << i for i in range(args.d)]
            pool = [w for w in range(1, 1 << args.d) if w not in basis]
            if args.m - args.d > len(pool):
                raise ValueError(f"no valid start with m={args.m} at d={args.d}")
            start = topology.build(args.d, basis + pool[: args.m - args.d])
        report = optimize.greedy_improve(
            start, swap_width=args.swap_width, max_rounds=args.max_rounds
        )
    hops_text = ",".join(gf2.word_to_text(h, report.best.d) for h in report.best.hops)
    lines = [
        f"method: {report.method}",
        f"d: {report.best.d}",
        f"m: {report.best.m}",
        f"best_b: {report.best_b}",
        f"evaluated: {report.evaluated}",
        f"rounds: {report.rounds}",
        f"hops: {hops_text}",
    ]
    sys.stdout.write("\n".join(lines) + "\n")
    if args.output:
        Path(args.output).write_text(topology.emit_hopset(report.best), encoding="utf-8")
    return 0


def _cmd_routes(args) -> int:
    t, _ = _load_topology(args.hopfile, args.allow_large)
    src = gf2.word_from_text(args.src) if args.src else 0
    dst = gf2.word_from_text(args.dest)
    if not 0 <= dst < t.N:
        raise ValueError(f"destination out of range for d={t.d}")
    if src == dst:
        raise ValueError("source equals destination")
    yrel = src ^ dst
    if args.diversity:
        paths = routing.disjoint_paths(t, yrel, args.diversity)
        kind = "disjoint"
    else:
        paths = routing.shortest_paths(t, yrel)
        kind = "shortest"
    lines = [
        f"yrel: {gf2.word_to_text(yrel, t.d)}",
        f"kind: {kind}",
        f"count: {len(paths)}",
    ]
    lines += [",".join(str(p) for p in path) for path in paths]
    _write_output("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_ftable(args) -> int:
    t, _ = _load_topology(args.hopfile, args.allow_large)
    table = routing.forwarding_table(t, args.diversity)
    _write_output(table.to_csv(), args.output)
    return 0


def _cmd_cluster(args) -> int:
    t, max_d = _load_topology(args.hopfile, args.allow_large)
    labels = topology.cluster(t, args.levels, max_d=max_d)
    lines = ["node,label"]
    lines += [
        f"{gf2.word_to_text(x, t.d)},{int(labels[x])}" for x in range(t.N)
    ]
    _write_output("\n".join(lines) + "\n", args.output)
    return 0


def _parse_lh_triple(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"expected 'd,m,delta', got {text!r}")
    try:
        d, m, delta = (int(p) for p in parts)
    except ValueError:
        raise ValueError(f"expected integers in 'd,m,delta', got {text!r}") from None
    return d, m, delta


def _cmd_compare(args) -> int:
    if args.lh_code:
        lh = codes.parse_generator(_read(args.lh_code))
    elif args.lh:
        lh = _parse_lh_triple(args.lh)
    else:
        raise ValueError("one of --lh or --lh-code is required")
    rows = cmp_mod.compare(args.ports, args.radix, lh, ft_levels=args.ft_levels)
    render = {
        "text": cmp_mod.render_text,
        "csv": cmp_mod.render_csv,
        "json": cmp_mod.render_json,
    }[args.format]
    _write_output(render(rows), args.output)
    return 0


def _cmd_verify(args) -> int:
    out = sys.stdout
    failed = False
    if args.edge_list:
        edges, n = topology.parse_edge_list(_read(args.edge_list))
        links = topology.bisection_bruteforce(edges, n)
        out.write(f"bruteforce_bisection_links: {links}\n")
        return 0
    t, max_d = _load_topology(args.hopfile, args.allow_large)
    scan = topology.bisection_scan(t, max_d=max_d)
    fwht = topology.bisection_fwht(t, max_d=max_d)
    agree = scan.b == fwht.b and (scan.cuts == fwht.cuts).all()
    out.write(f"scan_vs_fwht: {'OK' if agree else 'FAIL'} (b={scan.b}, B={scan.links} links)\n")
    failed |= not agree

    rng = random.Random(args.seed)
    if t.d <= 6:
        sample = range(1, t.N)
    else:
        sample = sorted(rng.sample(range(1, t.N), 64))
    ok_cut = True
    for r in sample:
        crossing = sum(1 for u, v in t.edges() if gf2.walsh(r, u) != gf2.walsh(r, v))
        if crossing != topology.cut_walsh(t, r) * (t.N // 2):
            ok_cut = False
            break
    out.write(
        f"cut_correspondence: {'OK' if ok_cut else 'FAIL'} ({len(list(sample))} partitions checked)\n"
    )
    failed |= not ok_cut

    if t.N <= 20:
        brute = topology.bisection_bruteforce(list(t.edges()), t.N)
        ok_brute = brute == scan.links
        out.write(
            f"bruteforce_oracle: {'OK' if ok_brute else 'FAIL'} "
            f"(equipartition minimum {brute} links)\n"
        )
        failed |= not ok_brute
    else:
        out.write("bruteforce_oracle: skipped (N > 20)\n")
    return 1 if failed else 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="longhop", description=__doc__)
    parser.add_argument("--seed", type=int, default=1, help="seed for randomized checks")
    parser.add_argument("--quiet", action="store_true", help="suppress informational logs")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, output=True):
        p.add_argument("--allow-large", action="store_true",
                       help=f"lift the d <= {topology.DEFAULT_MAX_D} full-spectrum cap")
        if output:
            p.add_argument("-o", "--output", default=None, help="write to file instead of stdout")

    p = sub.add_parser("bisect", help="bisection of a hop-set file")
    p.add_argument("hopfile")
    p.add_argument("--method", choices=["fwht", "scan"], default="fwht")
    p.add_argument("--spectrum", action="store_true", help="print all cuts and eigenvalues")
    p.add_argument("--format", choices=["text", "json"], default="text")
    add_common(p)
    p.set_defaults(func=_cmd_bisect)

    p = sub.add_parser("mindist", help="minimum distance of a generator-matrix file")
    p.add_argument("genfile")
    p.add_argument("--limit", type=int, default=codes.DEFAULT_EXHAUSTION_LIMIT,
                   help="refuse exhaustive search beyond this k")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_mindist)

    p = sub.add_parser("convert", help="translate between code and hop-set files")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--to-hops", action="store_true", help="generator matrix -> hop set")
    group.add_argument("--to-code", action="store_true", help="hop set -> generator matrix")
    p.add_argument("infile")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("optimize", help="search for a bisection-maximizing hop set")
    p.add_argument("-d", type=int, required=True, help="dimension (log2 of node count)")
    p.add_argument("-m", type=int, required=True, help="number of hops")
    p.add_argument("--method", choices=["brute", "greedy"], default="brute")
    p.add_argument("--start", default=None, help="hop-set file to start greedy from")
    p.add_argument("--swap-width", type=int, choices=[1, 2], default=1)
    p.add_argument("--max-rounds", type=int, default=100)
    p.add_argument("-o", "--output", default=None, help="write best hop set to this file")
    p.set_defaults(func=_cmd_optimize)

    p = sub.add_parser("routes", help="shortest or edge-disjoint paths")
    p.add_argument("hopfile")
    p.add_argument("--dest", required=True, help="destination as a binary node label")
    p.add_argument("--src", default=None, help="source node label (default 0)")
    p.add_argument("--diversity", type=int, default=None,
                   help="return this many edge-disjoint paths instead of all shortest")
    add_common(p)
    p.set_defaults(func=_cmd_routes)

    p = sub.add_parser("ftable", help="forwarding table as CSV")
    p.add_argument("hopfile")
    p.add_argument("--diversity", type=int, required=True, help="selectors per destination")
    add_common(p)
    p.set_defaults(func=_cmd_ftable)

    p = sub.add_parser("cluster", help="recursive minimum-cut clustering labels")
    p.add_argument("hopfile")
    p.add_argument("--levels", type=int, required=True)
    add_common(p)
    p.set_defaults(func=_cmd_cluster)

    p = sub.add_parser("compare", help="topology-family cost comparison table")
    p.add_argument("--ports", type=float, required=True)
    p.add_argument("--radix", type=float, required=True)
    p.add_argument("--lh", default=None, help="long-hop code as 'd,m,delta'")
    p.add_argument("--lh-code", default=None, help="long-hop generator-matrix file")
    p.add_argument("--ft-levels", type=int, default=4)
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("verify", help="cross-check bisection algorithms on an instance")
    p.add_argument("hopfile", nargs="?", default=None)
    p.add_argument("--edge-list", default=None,
                   help="run the equipartition oracle on an edge-list file instead")
    add_common(p, output=False)
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "verify" and not args.hopfile and not args.edge_list:
            raise ValueError("verify needs a hop-set file or --edge-list")
        return args.func(args)
    except _UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except (routing.Unroutable, cmp_mod.Infeasible) as exc:
        sys.stderr.write(f"infeasible: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
