"""Command-line interface.

Exit codes: 0 when the property holds or the command succeeded, 1 when the
property fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .criticality import (
    DEFAULT_TUTTE_BOUND,
    BoundExceededError,
    CriticalityVerdict,
    check_near_factor,
    check_perfect_matching,
    is_factor_critical,
    is_nfc_by_definition,
    is_nfc_by_theorem,
    tutte_witness,
)
from .graph import GraphError, generate, parse_graph, random_graph, serialize_graph
from .harness import EnumerationBoundError, append_csv, reports_to_csv, verify_theorems
from .matching import max_matching
from .oracle import OracleBoundError, enumerate_matchings, has_near_factor_brute, has_perfect_brute, max_matching_size_brute

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

PROPERTIES = ("nfc", "factor-critical", "perfect", "near-factor")
KINDS = ("path", "cycle", "complete", "star", "empty", "random")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_graph(path: str):
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as fh:
            data = fh.read()
    return parse_graph(data)


def _verdict_for(prop: str, route: str | None, g) -> CriticalityVerdict:
    if prop == "nfc":
        return is_nfc_by_definition(g) if route == "definition" else is_nfc_by_theorem(g)
    if route == "theorem":
        raise ValueError(f"--route theorem only applies to nfc, not {prop}")
    if prop == "factor-critical":
        return is_factor_critical(g)
    if prop == "perfect":
        return check_perfect_matching(g)
    return check_near_factor(g)


def _witness_line(v: CriticalityVerdict) -> str:
    d = v.witness.to_dict()
    kind = d.pop("kind")
    if kind == "tutte-set":
        shown = "{" + ", ".join(map(str, d["s"])) + "}" if d["s"] else "∅"
        return f"witness: tutte-set S={shown}, odd components {d['odd_count']}"
    if kind == "certificate":
        lines = ["witness: certificate"]
        for key, edges in d["matchings"].items():
            label = "G" if key == "-1" else f"G-{key}"
            lines.append(f"  {label}: " + " ".join(f"{u}-{v}" for u, v in edges))
        return "\n".join(lines)
    return f"witness: {kind} " + " ".join(f"{k}={val}" for k, val in d.items())


def cmd_check(args) -> int:
    g = _read_graph(args.file)
    verdict = _verdict_for(args.property, args.route, g)
    if args.json:
        print(json.dumps(verdict.to_dict(), sort_keys=True))
    else:
        print(verdict.summary())
        if args.witness:
            print(_witness_line(verdict))
    return EXIT_OK if verdict.holds else EXIT_FAIL


def cmd_match(args) -> int:
    g = _read_graph(args.file)
    m = max_matching(g)
    if args.json:
        print(json.dumps({"size": len(m), "edges": [list(e) for e in m.sorted_edges()]}))
    else:
        sys.stdout.write(m.serialize())
    return EXIT_OK


def cmd_tutte(args) -> int:
    g = _read_graph(args.file)
    w = tutte_witness(g, bound=args.max_n)
    if args.json:
        print(json.dumps(None if w is None else {"s": sorted(w.s), "odd_count": w.odd_count}))
    elif w is None:
        print("tutte condition holds: no set S with o(G-S) > |S|")
    else:
        s = sorted(w.s)
        shown = "{" + ", ".join(map(str, s)) + "}" if s else "∅"
        print(f"tutte witness S={shown} odd components {w.odd_count} > {len(s)}")
    return EXIT_OK if w is None else EXIT_FAIL


def cmd_gen(args) -> int:
    if args.kind == "random":
        g = random_graph(args.n, args.p, args.seed)
    else:
        g = generate(args.kind, args.n)
    sys.stdout.write(serialize_graph(g))
    return EXIT_OK


def cmd_verify(args) -> int:
    reports = verify_theorems(
        args.max_n,
        mode=args.mode,
        count=args.count,
        seed=args.seed,
        jobs=args.jobs,
        tutte_max_n=args.tutte_max_n,
        allow_large=args.allow_large,
    )
    sys.stdout.write(reports_to_csv(reports))
    if args.csv:
        append_csv(reports, args.csv)
    bad = [m for r in reports for m in r.mismatches]
    for m in bad:
        print(json.dumps(m, sort_keys=True), file=sys.stderr)
    return EXIT_OK if not bad else EXIT_FAIL


def cmd_oracle(args) -> int:
    g = _read_graph(args.file)
    total = sum(1 for _ in enumerate_matchings(g))
    facts = {
        "matchings": total,
        "max_size": max_matching_size_brute(g),
        "perfect": has_perfect_brute(g),
        "near_factor": has_near_factor_brute(g),
    }
    if args.json:
        print(json.dumps(facts))
    else:
        for k, v in facts.items():
            print(f"{k}: {str(v).lower() if isinstance(v, bool) else v}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nearfactor", description="Matching and near-factor-criticality checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="decide a property of a graph")
    p.add_argument("property", choices=PROPERTIES)
    p.add_argument("file", help="graph file, or - for stdin")
    p.add_argument("--route", choices=("definition", "theorem"), default=None,
                   help="nfc only; defaults to theorem")
    p.add_argument("--witness", action="store_true", help="print the witness")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("match", help="print a maximum matching")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("tutte", help="exhaustive search for a Tutte set")
    p.add_argument("file")
    p.add_argument("--max-n", type=int, default=DEFAULT_TUTTE_BOUND,
                   help="largest order to search (default %(default)s)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_tutte)

    p = sub.add_parser("gen", help="write a generated graph")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("n", type=int)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="cross-check the characterisation on small graphs")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--tutte-max-n", type=int, default=6)
    p.add_argument("--allow-large", action="store_true", help="permit exhaustive n=8")
    p.add_argument("--csv", help="append per-order rows to this CSV file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force matching facts")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except OSError as exc:
        print(f"nearfactor: {exc}", file=sys.stderr)
    except (GraphError, BoundExceededError, EnumerationBoundError, OracleBoundError, ValueError) as exc:
        print(f"nearfactor: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
