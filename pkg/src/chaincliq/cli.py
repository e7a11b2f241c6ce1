"""Command-line entry point; every subcommand is a thin adapter over the library.

Output is machine-first JSON in the same canonical encodings the library
produces (--pretty re-indents it); diagnostics go to stderr. Exit codes:
0 success, 1 domain errors such as validation failures or infeasible
parameters, 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .chains import (
    CHAIN_FORMAT,
    StepDistribution,
    enumerate_chains,
    random_chain,
    read_chain,
    write_chain,
)
from .derived import (
    build_difference_graph,
    find_triangle,
    verify_lemma_123,
    verify_lemma_abcd,
    write_difference_graph,
)
from .oracle import MIS_CUTOFF, max_cliquepair_free_family, max_independent_set, write_family_report, write_oracle_report
from .search import RECORD_FORMAT, SearchConfig, append_record, load_records, local_search_min_ratio, write_record
from .witness import alon_witness, best_witness, greedy_good_witness, write_witness

VERIFY_FORMAT = "chaincliq-verify-v1"

_WITNESS_METHODS = {
    "greedy": greedy_good_witness,
    "alon": alon_witness,
    "best": best_witness,
}


def _parse_step_dist(text: str) -> StepDistribution:
    if text == "single":
        return StepDistribution("single")
    if text.startswith("geometric:"):
        try:
            p = float(text.split(":", 1)[1])
            return StepDistribution("geometric", p)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None
    raise argparse.ArgumentTypeError("expected 'single' or 'geometric:P' with P in (0, 1]")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chaincliq",
        description="Difference graphs of nested graph chains: generation, "
        "witnesses, exact oracles, and extremal search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", metavar="PATH", help="write the result here instead of stdout")
        p.add_argument("--pretty", action="store_true", help="indent the JSON output")

    p = sub.add_parser("gen", help="generate a seeded random chain")
    p.add_argument("--n", type=int, required=True, help="vertex count")
    p.add_argument("--r", type=int, required=True, help="chain length")
    p.add_argument("--seed", type=int, default=0, help="64-bit seed (default 0)")
    p.add_argument(
        "--step-dist",
        type=_parse_step_dist,
        default=StepDistribution("single"),
        metavar="DIST",
        help="single or geometric:P (default single)",
    )
    common(p)

    p = sub.add_parser("derive", help="build the difference graph of a chain")
    p.add_argument("--in", dest="infile", required=True, metavar="PATH", help="chain document")
    common(p)

    p = sub.add_parser("witness", help="extract an independent set from a chain")
    p.add_argument("--in", dest="infile", required=True, metavar="PATH", help="chain document")
    p.add_argument(
        "--method", choices=sorted(_WITNESS_METHODS), default="best", help="extraction method"
    )
    common(p)

    p = sub.add_parser("oracle", help="exact independence number of a chain")
    p.add_argument("--in", dest="infile", required=True, metavar="PATH", help="chain document")
    p.add_argument("--cutoff", type=int, default=MIS_CUTOFF, help="exact-search size limit")
    common(p)

    p = sub.add_parser("verify", help="check a chain document or a records file")
    p.add_argument(
        "--in", dest="infile", required=True, metavar="PATH", help="chain document or records file"
    )
    p.add_argument("--cutoff", type=int, default=MIS_CUTOFF, help="exact-search size limit")
    p.add_argument(
        "--verify",
        action="store_true",
        help="for records files, also recompute each stored alpha",
    )
    common(p)

    p = sub.add_parser("enumerate", help="stream every chain of a given (n, r)")
    p.add_argument("--n", type=int, required=True, help="vertex count")
    p.add_argument("--r", type=int, required=True, help="chain length")
    common(p)

    p = sub.add_parser("conjecture", help="largest clique-pair-free family of graphs")
    p.add_argument("--n", type=int, required=True, help="vertex count (at most 4)")
    common(p)

    p = sub.add_parser("search", help="anneal for chains with a small independence ratio")
    p.add_argument("--n", type=int, required=True, help="vertex count")
    p.add_argument("--r", type=int, required=True, help="chain length")
    p.add_argument("--budget", type=int, default=10_000, help="move evaluations (default 10000)")
    p.add_argument("--seed", type=int, default=0, help="64-bit seed (default 0)")
    common(p)

    return parser


def _emit(args: argparse.Namespace, text: str, doc: object | None = None) -> None:
    if args.pretty and doc is not None:
        text = json.dumps(doc, indent=2)
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _cmd_gen(args: argparse.Namespace) -> int:
    chain = random_chain(args.n, args.r, args.step_dist, args.seed)
    text = write_chain(chain)
    _emit(args, text, json.loads(text))
    return 0


def _cmd_derive(args: argparse.Namespace) -> int:
    chain = read_chain(Path(args.infile).read_text(encoding="utf-8"))
    text = write_difference_graph(build_difference_graph(chain))
    _emit(args, text, json.loads(text))
    return 0


def _cmd_witness(args: argparse.Namespace) -> int:
    chain = read_chain(Path(args.infile).read_text(encoding="utf-8"))
    ws = _WITNESS_METHODS[args.method](build_difference_graph(chain))
    text = write_witness(ws)
    _emit(args, text, json.loads(text))
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    chain = read_chain(Path(args.infile).read_text(encoding="utf-8"))
    report = max_independent_set(build_difference_graph(chain), cutoff=args.cutoff)
    text = write_oracle_report(report)
    _emit(args, text, json.loads(text))
    return 0


def _verify_chain_checks(chain, cutoff: int) -> list[dict]:
    dg = build_difference_graph(chain)
    checks = []
    violation = verify_lemma_abcd(dg)
    checks.append(
        {"name": "lemma-abcd", "pass": violation is None,
         "detail": "no violating tuple" if violation is None else f"violation {violation.indices}"}
    )
    violation = verify_lemma_123(dg)
    checks.append(
        {"name": "lemma-123", "pass": violation is None,
         "detail": "no bad run" if violation is None else f"violation {violation.indices}"}
    )
    triangle = find_triangle(dg)
    checks.append(
        {"name": "triangle-free", "pass": triangle is None,
         "detail": "no triangle" if triangle is None else f"triangle {triangle}"}
    )
    sizes = {}
    for name, fn in (("witness-greedy-good", greedy_good_witness), ("witness-alon-triples", alon_witness)):
        try:
            ws = fn(dg)
            sizes[name] = len(ws.indices)
            checks.append(
                {"name": name, "pass": True,
                 "detail": f"size {len(ws.indices)} >= floor {ws.guarantee}"}
            )
        except ValueError as exc:
            checks.append({"name": name, "pass": False, "detail": str(exc)})
    if dg.r <= cutoff:
        report = max_independent_set(dg, cutoff=cutoff)
        ok = all(report.alpha >= s for s in sizes.values()) and len(sizes) == 2
        checks.append(
            {"name": "oracle-alpha", "pass": ok,
             "detail": f"alpha {report.alpha} vs witness sizes {sorted(sizes.values())}"}
        )
    return checks


def _cmd_verify(args: argparse.Namespace) -> int:
    text = Path(args.infile).read_text(encoding="utf-8")
    kind = None
    try:
        doc = json.loads(text)
        if isinstance(doc, dict):
            kind = doc.get("format")
    except json.JSONDecodeError:
        kind = RECORD_FORMAT  # multi-line input: treat as a records file
    if kind == CHAIN_FORMAT:
        chain = read_chain(text)
        checks = _verify_chain_checks(chain, args.cutoff)
        all_pass = all(c["pass"] for c in checks)
        summary = {"format": VERIFY_FORMAT, "subject": "chain", "r": chain.r,
                   "checks": checks, "all_pass": all_pass}
        for c in checks:
            print(f"{'PASS' if c['pass'] else 'FAIL'} {c['name']}: {c['detail']}", file=sys.stderr)
        _emit(args, json.dumps(summary), summary)
        return 0 if all_pass else 1
    if kind == RECORD_FORMAT:
        records = load_records(args.infile, verify=args.verify)
        summary = {"format": VERIFY_FORMAT, "subject": "records",
                   "records": len(records), "alpha_recomputed": bool(args.verify),
                   "all_pass": True}
        print(f"PASS records: {len(records)} valid line(s)", file=sys.stderr)
        _emit(args, json.dumps(summary), summary)
        return 0
    raise ValueError(f"cannot verify {args.infile}: unrecognized document format {kind!r}")


def _cmd_enumerate(args: argparse.Namespace) -> int:
    lines = (write_chain(c) for c in enumerate_chains(args.n, args.r))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            for line in lines:
                handle.write(line + "\n")
    else:
        for line in lines:
            print(line)
    return 0


def _cmd_conjecture(args: argparse.Namespace) -> int:
    report = max_cliquepair_free_family(args.n)
    text = write_family_report(report)
    _emit(args, text, json.loads(text))
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    cfg = SearchConfig(n=args.n, r=args.r, budget=args.budget, seed=args.seed)
    record = local_search_min_ratio(cfg)
    if args.out:
        append_record(args.out, record)
        print(f"appended record (ratio {record.ratio}) to {args.out}", file=sys.stderr)
    else:
        text = write_record(record)
        if args.pretty:
            text = json.dumps(json.loads(text), indent=2)
        print(text)
    return 0


_COMMANDS = {
    "gen": _cmd_gen,
    "derive": _cmd_derive,
    "witness": _cmd_witness,
    "oracle": _cmd_oracle,
    "verify": _cmd_verify,
    "enumerate": _cmd_enumerate,
    "conjecture": _cmd_conjecture,
    "search": _cmd_search,
}


def run_cli(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles usage errors and --help
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))
