"""Command-line entry point: analyze, verify, enumerate, export.

Exit codes: 0 success, 1 usage or spec parse error, 2 lattice validation
error, 3 asserted claim failed during a verify run.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import generators, verify
from .dimensions import AnalysisBundle, analyze
from .generators import ENUM_MAX, SpecParseError
from .lattice import LatticeValidationError, dump_doc, to_doc
from .render import IMAGE_SUFFIXES, hasse_dot, render_hasse_figure, topology_dot

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_CLAIM_FAILURE = 3


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="shtopo",
        description=(
            "Strongly hollow elements of finite bounded lattices: SH/W topologies, "
            "derived and dual-classical Krull dimensions, claim verification."
        ),
    )
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full report for one lattice spec")
    a.add_argument("spec", help="lattice spec, e.g. zn:12, chain:4, m3, "
                                "prod(zn:4,zn:9), file:doc.json")
    a.add_argument("--format", choices=("text", "json", "dot"), default="text")
    a.add_argument("--out", help="write the report to this file instead of stdout")
    a.add_argument("--fig", help="also render a Hasse/strata figure (.png/.svg/.pdf)")

    v = sub.add_parser("verify", help="run the claim suite over a corpus")
    v.add_argument("--exhaustive", type=int, default=5, metavar="N",
                   help=f"enumerate all lattices up to N elements (bound {ENUM_MAX}; "
                        "0 disables; default 5)")
    v.add_argument("--rings", default="", metavar="SPEC,...",
                   help="comma-separated lattice specs; ranges like zn:2..60 expand")
    v.add_argument("--random", type=int, default=0, metavar="COUNT",
                   help="number of extra random lattices (default 0)")
    v.add_argument("--random-size", type=int, default=8, metavar="SIZE")
    v.add_argument("--seed", type=int, default=7, help="seed for sampling (default 7)")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--out", help="write the JSON run summary to this file")
    v.add_argument("--witness-dir", metavar="DIR",
                   help="write each failing claim's smallest counterexample as "
                        "a replayable JSON lattice document in DIR")

    e = sub.add_parser("enumerate", help="stream all bounded lattices up to a size")
    e.add_argument("--max", type=int, default=5, metavar="N",
                   help=f"size bound (documented limit {ENUM_MAX}; default 5)")
    e.add_argument("--all-labelings", action="store_true",
                   help="yield every labeled copy instead of one per isomorphism class")
    e.add_argument("--format", choices=("text", "json"), default="text")

    x = sub.add_parser("export", help="write a DOT/image/JSON rendering of one lattice")
    x.add_argument("spec")
    x.add_argument("what", choices=("hasse", "strata", "topology", "lattice"))
    x.add_argument("path", help="output file; .dot for DOT text, .png/.svg/.pdf "
                                "for a figure, .json for the lattice document")
    return p


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def cmd_analyze(args: argparse.Namespace) -> int:
    bundle = AnalysisBundle(generators.parse_spec(args.spec), spec=args.spec)
    report = analyze(bundle)
    if args.fig:
        render_hasse_figure(bundle, args.fig)
    if args.format == "json":
        _emit(report.to_json(), args.out)
    elif args.format == "dot":
        _emit(hasse_dot(bundle, with_strata=True), args.out)
    else:
        _emit(report.to_text(), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.exhaustive and args.exhaustive > ENUM_MAX:
        print(
            f"error: --exhaustive {args.exhaustive} exceeds the documented "
            f"enumeration bound of {ENUM_MAX} elements",
            file=sys.stderr,
        )
        return EXIT_USAGE
    specs: list[str] = []
    for part in filter(None, (s.strip() for s in args.rings.split(","))):
        specs.extend(generators.expand_spec_ranges(part))
    config = verify.CorpusConfig(
        exhaustive_max=args.exhaustive or None,
        specs=tuple(specs),
        random_count=args.random,
        random_size=args.random_size,
        seed=args.seed,
    )
    run = verify.run_suite(config)
    if args.format == "json":
        print(run.to_json())
    else:
        print(run.to_text())
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(run.to_json() + "\n")
    if args.witness_dir and run.witnesses:
        os.makedirs(args.witness_dir, exist_ok=True)
        for claim_id, w in sorted(run.witnesses.items()):
            path = os.path.join(args.witness_dir, f"{claim_id}.json")
            with open(path, "w", encoding="utf-8") as fh:
                json.dump(w.doc, fh, indent=2, sort_keys=True)
                fh.write("\n")
    return EXIT_OK if run.ok else EXIT_CLAIM_FAILURE


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.max > ENUM_MAX:
        print(
            f"error: --max {args.max} exceeds the documented enumeration bound "
            f"of {ENUM_MAX} elements",
            file=sys.stderr,
        )
        return EXIT_USAGE
    distinct = not args.all_labelings
    if args.format == "json":
        for lat in generators.enumerate_lattices(args.max, distinct=distinct):
            print(json.dumps(to_doc(lat), sort_keys=True))
    else:
        counts: dict[int, int] = {}
        for lat in generators.enumerate_lattices(args.max, distinct=distinct):
            counts[lat.n] = counts.get(lat.n, 0) + 1
        print(f"{'size':>5} {'lattices':>9}")
        total = 0
        for n in sorted(counts):
            print(f"{n:>5} {counts[n]:>9}")
            total += counts[n]
        print(f"total {total:>9}" + ("" if distinct else "  (all labelings)"))
    return EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    bundle = AnalysisBundle(generators.parse_spec(args.spec), spec=args.spec)
    path = args.path
    if args.what == "lattice":
        dump_doc(bundle.lattice, path)
        return EXIT_OK
    if path.lower().endswith(IMAGE_SUFFIXES):
        if args.what == "topology":
            print("error: topology export supports DOT output only", file=sys.stderr)
            return EXIT_USAGE
        render_hasse_figure(bundle, path, with_strata=(args.what == "strata"))
        return EXIT_OK
    if args.what == "topology":
        text = topology_dot(bundle)
    else:
        text = hasse_dot(bundle, with_strata=(args.what == "strata"))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return EXIT_OK


_COMMANDS = {
    "analyze": cmd_analyze,
    "verify": cmd_verify,
    "enumerate": cmd_enumerate,
    "export": cmd_export,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _COMMANDS[args.command](args)
    except SpecParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LatticeValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
