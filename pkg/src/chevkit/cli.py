"""Command-line front end: ``chevkit {table,verify,fold,cocycle,bench}``."""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Optional, Sequence, TextIO

from .chevalley import build_special, structure_table
from .cocycle import NonSimplyLacedError, check_flm, epsilon0, epsilon_kac
from .folding import FoldingError, _folding_data, folded_sign, folding_data, lifts
from .orientation import OrientationError, bilinear, oriented_edges, orientation, rho_matrix
from .rootsys import CartanType, CartanTypeError, RootError, build_root_system, format_root
from .verify import SUITES, applicable, run_suites, table_csv

COLUMNS = ("alpha", "beta", "rho_ab", "rho_ba", "N")


class UsageError(Exception):
    """Bad arguments; reported as one line with exit status 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # one-line reason instead of the usage block
        raise UsageError(message)


def _add_type(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", "-t", required=True, help='Cartan type, e.g. "F4", or a letter together with --rank')
    p.add_argument("--rank", "-r", type=int, help="rank when --type is a bare letter")


def _add_orientation(p: argparse.ArgumentParser, allow_both: bool = False) -> None:
    choices = ["plus", "minus", "both"] if allow_both else ["plus", "minus"]
    p.add_argument("--orientation", "-o", choices=choices, default="both" if allow_both else "plus")


def _add_format(p: argparse.ArgumentParser, choices: Sequence[str]) -> None:
    p.add_argument("--format", "-f", choices=list(choices), default="pretty")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chevkit", description="Special Chevalley bases: structure constants and their verification.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("table", help="structure-constant ledger")
    _add_type(p)
    _add_orientation(p)
    p.add_argument("--roots", choices=["positive", "all"], default="positive")
    _add_format(p, ["pretty", "csv", "tsv", "json"])

    p = sub.add_parser("verify", help="run verification suites")
    _add_type(p)
    _add_orientation(p, allow_both=True)
    p.add_argument("--suites", "-s", default="all", help=f"comma list from: {', '.join(SUITES)} (default: all)")
    _add_format(p, ["pretty", "json"])

    p = sub.add_parser("fold", help="show the folding cover and chosen lifts")
    _add_type(p)
    _add_orientation(p)
    p.add_argument("--show-lifts", action="store_true", help="list every composable pair with its lift")
    _add_format(p, ["pretty", "json"])

    p = sub.add_parser("cocycle", help="cocycle generators and FLM report (simply laced types)")
    _add_type(p)
    _add_orientation(p)
    p.add_argument("--kind", choices=["eps0", "kac", "both"], default="both")
    p.add_argument("--samples", type=int, default=10_000, help="seeded lattice triples for FLM1/FLM2")
    _add_format(p, ["pretty", "json"])

    p = sub.add_parser("bench", help="time full structure-table builds")
    p.add_argument("--type", "-t", default="E8")
    p.add_argument("--rank", "-r", type=int)
    p.add_argument("--repeat", type=int, default=1)
    return parser


def _ctype(args) -> CartanType:
    try:
        return CartanType.parse(args.type, args.rank)
    except CartanTypeError as exc:
        raise UsageError(str(exc)) from None


# --- subcommands ------------------------------------------------------------


def _pretty(rows: List[dict]) -> str:
    if not rows:
        return "  ".join(COLUMNS) + "\n(no composable pairs)\n"
    width = {k: max(len(k), *(len(str(r[k])) for r in rows)) for k in COLUMNS}
    fmt = lambda vals: "  ".join(str(v).rjust(width[k]) for k, v in zip(COLUMNS, vals))  # noqa: E731
    return "\n".join([fmt(COLUMNS)] + [fmt([r[k] for k in COLUMNS]) for r in rows]) + "\n"


def cmd_table(args, out: TextIO) -> int:
    ctype = _ctype(args)
    rs = build_root_system(ctype)
    L = build_special(ctype, orientation(rs, args.orientation))
    rows = structure_table(L, args.roots)
    if args.format == "csv":
        out.write(table_csv(rows))
    elif args.format == "tsv":
        out.write(table_csv(rows, sep="\t"))
    elif args.format == "json":
        doc = {"type": str(ctype), "rank": ctype.rank, "orientation": args.orientation, "rows": rows}
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(f"# {ctype} orientation={args.orientation} signs={L.signs.c} roots={args.roots}\n")
        out.write(_pretty(rows))
    return 0


def _suite_names(text: str, ctype: CartanType) -> List[str]:
    if text == "all":
        return [n for n in SUITES if applicable(n, ctype)]
    names = [s.strip() for s in text.split(",") if s.strip()]
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s) {', '.join(unknown)}; choose from {', '.join(SUITES)}")
    skipped = [n for n in names if not applicable(n, ctype)]
    if skipped:
        raise UsageError(f"suite(s) {', '.join(skipped)} do not apply to {ctype}")
    return names


def cmd_verify(args, out: TextIO) -> int:
    ctype = _ctype(args)
    rs = build_root_system(ctype)
    names = _suite_names(args.suites, ctype)
    which = ["plus", "minus"] if args.orientation == "both" else [args.orientation]
    jobs = []
    for name in names:
        # golden data is orientation-independent
        for o in which[:1] if name == "golden" else which:
            jobs.append((name, ctype, orientation(rs, o)))
    reports = run_suites(jobs)
    ok = all(r.passed for r in reports)
    if args.format == "json":
        doc = {"type": str(ctype), "rank": ctype.rank, "passed": ok, "reports": [r.to_dict() for r in reports]}
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        for r in reports:
            out.write(r.summary() + "\n")
        out.write(("all suites passed" if ok else "verification FAILED") + "\n")
    return 0 if ok else 1


def cmd_fold(args, out: TextIO) -> int:
    ctype = _ctype(args)
    rs = build_root_system(ctype)
    signs = orientation(rs, args.orientation)
    fd = folding_data(ctype, signs)
    m, ms = rho_matrix(rs, signs), rho_matrix(fd.source, fd.source_signs)
    pairs = []
    if args.show_lifts:
        for a, b in rs.composable_pairs():
            ls = lifts(fd, a, b)
            x, y = ls[0].alpha_src, ls[0].beta_src
            pairs.append(
                {
                    "alpha": format_root(a),
                    "beta": format_root(b),
                    "lift_alpha": format_root(x),
                    "lift_beta": format_root(y),
                    "n_lifts": len(ls),
                    "rho_ab": bilinear(m, a, b),
                    "rho_ba": bilinear(m, b, a),
                    "cover_rho_ab": bilinear(ms, x, y),
                    "cover_rho_ba": bilinear(ms, y, x),
                    "sign": folded_sign(fd, a, b),
                }
            )
    info = {
        "type": str(ctype),
        "rank": ctype.rank,
        "orientation": args.orientation,
        "cover": str(fd.source.ctype),
        "order": fd.e,
        "tau": [t + 1 for t in fd.tau],
        "eta": [t + 1 for t in fd.eta],
        "signs": list(signs.c),
        "cover_signs": list(fd.source_signs.c),
    }
    if args.format == "json":
        info["pairs"] = pairs
        out.write(json.dumps(info, indent=2) + "\n")
        return 0
    out.write(f"{ctype} <- {fd.source.ctype}  (automorphism of order {fd.e})\n")
    out.write(f"tau  = {info['tau']}\neta  = {info['eta']}\n")
    out.write(f"signs = {info['signs']}  cover signs = {info['cover_signs']}\n")
    if args.show_lifts:
        keys = list(pairs[0]) if pairs else []
        out.write(_aligned(keys, pairs))
    return 0


def _aligned(keys: List[str], rows: List[dict]) -> str:
    if not rows:
        return "(no composable pairs)\n"
    width = {k: max(len(k), *(len(str(r[k])) for r in rows)) for k in keys}
    lines = ["  ".join(k.rjust(width[k]) for k in keys)]
    lines += ["  ".join(str(r[k]).rjust(width[k]) for k in keys) for r in rows]
    return "\n".join(lines) + "\n"


def cmd_cocycle(args, out: TextIO) -> int:
    ctype = _ctype(args)
    rs = build_root_system(ctype)
    signs = orientation(rs, args.orientation)
    kinds = ["eps0", "kac"] if args.kind == "both" else [args.kind]
    docs = []
    for kind in kinds:
        c = epsilon0(rs, signs) if kind == "eps0" else epsilon_kac(rs, oriented_edges(rs, signs))
        rep = check_flm(c, rs, samples=args.samples, seed=0)
        docs.append(
            {
                "kind": kind,
                "generators": [list(r) for r in c.gen],
                "flm": {"passed": rep.passed, "checks": rep.checks, "axiom": rep.axiom,
                        "counterexample": rep.counterexample},
            }
        )
    ok = all(d["flm"]["passed"] for d in docs)
    if args.format == "json":
        doc = {"type": str(ctype), "rank": ctype.rank, "orientation": args.orientation, "cocycles": docs}
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        for d in docs:
            out.write(f"{d['kind']} on {ctype} ({args.orientation}):\n")
            for row in d["generators"]:
                out.write("  " + " ".join(f"{x:+d}" for x in row) + "\n")
            f = d["flm"]
            status = "pass" if f["passed"] else f"FAIL {f['axiom']} at {f['counterexample']}"
            out.write(f"  FLM: {status} ({f['checks']} checks)\n")
    return 0 if ok else 1


def cmd_bench(args, out: TextIO) -> int:
    ctype = _ctype(args)
    rs = build_root_system(ctype)
    if args.repeat < 1:
        raise UsageError("--repeat must be at least 1")
    best = float("inf")
    count = 0
    for _ in range(args.repeat):
        _folding_data.cache_clear()
        t0 = time.perf_counter()
        L = build_special(ctype, orientation(rs, "plus"))
        rows = structure_table(L, "all")
        best = min(best, time.perf_counter() - t0)
        count = len(L.N)
    out.write(f"{ctype}: {len(rs.roots)} roots, {count} structure constants, {len(rows)} table rows\n")
    out.write(f"best of {args.repeat}: {best:.3f}s ({count / best:,.0f} constants/s)\n")
    return 0


COMMANDS = {"table": cmd_table, "verify": cmd_verify, "fold": cmd_fold, "cocycle": cmd_cocycle, "bench": cmd_bench}


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        err.write(f"chevkit: error: {exc}\n")
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"chevkit: error: {exc}\n")
        return 2
    except (CartanTypeError, OrientationError, NonSimplyLacedError, RootError, ValueError) as exc:
        err.write(f"chevkit: error: {exc}\n")
        return 2
    except FoldingError as exc:
        err.write(f"chevkit: internal error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())
