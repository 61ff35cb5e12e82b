"""Command-line interface.

Exit status: 0 on success, 1 when an input violates a mathematical
precondition, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from hirzcusp.bounds import bound_report, max_cusps
from hirzcusp.errors import DomainError
from hirzcusp.germs import CuspidalConfig, parse_sequence
from hirzcusp.lattice import build, resolution_json
from hirzcusp.search import SearchSpec, enumerate_configs, write_census
from hirzcusp.snc import SncGraph, classification_report

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

log = logging.getLogger("hirzcusp")


class UsageError(Exception):
    pass


def _add_config_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("key", nargs="?", help="configuration key such as 'F0(2,3)[2][2]'")
    p.add_argument("--e", type=int, help="Hirzebruch surface type")
    p.add_argument("--a", type=int, help="coefficient of the fiber L")
    p.add_argument("--b", type=int, help="coefficient of the section M")
    p.add_argument("--cusp", action="append", default=[], metavar="SEQ",
                   help="multiplicity sequence, e.g. '[3_2]' or '[2,1,1]' (repeatable)")


def _config_from(args) -> CuspidalConfig:
    if args.key:
        if args.e is not None or args.a is not None or args.b is not None or args.cusp:
            raise UsageError("give either a configuration key or --e/--a/--b/--cusp, not both")
        return CuspidalConfig.from_key(args.key)
    missing = [f"--{n}" for n in ("e", "a", "b") if getattr(args, n) is None]
    if missing:
        raise UsageError(f"missing {', '.join(missing)}")
    return CuspidalConfig.of(args.e, args.a, args.b, [parse_sequence(c) for c in args.cusp])


def _print_json(doc) -> None:
    print(json.dumps(doc, indent=2))


def cmd_genus(args) -> int:
    cfg = _config_from(args)
    cfg.require_feasible()
    print(cfg.genus)
    return 0


def cmd_delta(args) -> int:
    print(parse_sequence(args.sequence).delta)
    return 0


def cmd_resolve(args) -> int:
    _print_json(resolution_json(build(_config_from(args))))
    return 0


def cmd_classify(args) -> int:
    if args.graph == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.graph) as fh:
                text = fh.read()
        except OSError as exc:
            raise DomainError(f"cannot read {args.graph}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"{args.graph}: not JSON ({exc})") from None
    _print_json(classification_report(SncGraph.from_json(doc)))
    return 0


def cmd_bound(args) -> int:
    if args.genus is not None:
        if args.key or args.e is not None or args.cusp:
            raise UsageError("--genus cannot be combined with a configuration")
        print(max_cusps(args.genus))
        return 0
    report = bound_report(_config_from(args))
    _print_json(report.to_json())
    return 0


def _spec_from(args) -> SearchSpec:
    data: dict = {}
    if args.config:
        try:
            with open(args.config, "rb") as fh:
                data = tomllib.load(fh)
        except OSError as exc:
            raise DomainError(f"cannot read {args.config}: {exc.strerror}") from None
        except tomllib.TOMLDecodeError as exc:
            raise DomainError(f"{args.config}: {exc}") from None
    overrides = {"e": args.e, "a": args.a, "b": args.b, "genus": args.genus,
                 "max_delta": args.max_delta, "format": args.format,
                 "output": args.output, "workers": args.workers}
    for k, v in overrides.items():
        if v is not None:
            data[k] = v
    if args.require_bmy:
        data["require_bmy"] = True
    for k in ("e", "a", "b"):
        if k not in data:
            raise UsageError(f"enumerate needs --{k} (or a config file entry)")
    try:
        return SearchSpec.from_mapping(data)
    except ValueError as exc:
        if isinstance(exc, DomainError):
            raise
        raise UsageError(str(exc)) from None


def cmd_enumerate(args) -> int:
    spec = _spec_from(args)
    records = enumerate_configs(spec)
    collected = [] if args.figure else None
    if collected is not None:
        records = _tee(records, collected)
    if spec.output:
        mode = "a" if args.checkpoint and os.path.exists(args.checkpoint) else "w"
        try:
            fh = open(spec.output, mode, newline="")
        except OSError as exc:
            raise DomainError(f"cannot open {spec.output}: {exc.strerror}") from None
        with fh:
            n = write_census(records, fh, spec.format, checkpoint=args.checkpoint,
                             limit=args.limit)
    else:
        n = write_census(records, sys.stdout, spec.format, checkpoint=args.checkpoint,
                         limit=args.limit)
    log.info("wrote %d records", n)
    if collected is not None:
        from hirzcusp.report import census_figure

        census_figure(collected, args.figure,
                      title=" ".join(f"{n}={lo}..{hi}" for n, (lo, hi) in
                                     zip("eab", (spec.e_range, spec.a_range, spec.b_range))))
    return 0


def _tee(records, sink):
    for r in records:
        sink.append(r)
        yield r


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hirzcusp", description="Cuspidal curves on Hirzebruch surfaces.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("genus", help="geometric genus of a configuration")
    _add_config_args(p)
    p.set_defaults(func=cmd_genus)

    p = sub.add_parser("delta", help="delta invariant of a multiplicity sequence")
    p.add_argument("sequence")
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("resolve", help="resolution lattice and dual graph as JSON")
    _add_config_args(p)
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("classify", help="rods, twigs, forks and barks of a graph JSON")
    p.add_argument("graph", help="graph or resolution JSON file, '-' for stdin")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("bound", help="cusp bound for a genus, or a full bound report")
    _add_config_args(p)
    p.add_argument("--genus", type=int)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("enumerate", help="census of cuspidal configurations")
    p.add_argument("--e", help="value or range lo..hi")
    p.add_argument("--a", help="value or range lo..hi")
    p.add_argument("--b", help="value or range lo..hi")
    p.add_argument("--genus", type=int, help="keep only configurations of this genus")
    p.add_argument("--max-delta", type=int, help="cap on the delta invariant of each cusp")
    p.add_argument("--require-bmy", action="store_true",
                   help="drop configurations failing the log B-M-Y inequality")
    p.add_argument("--format", choices=("jsonl", "csv"))
    p.add_argument("--output", help="write records to this file instead of stdout")
    p.add_argument("--config", help="TOML file with search settings; flags override it")
    p.add_argument("--workers", type=int, help="worker threads (output does not depend on it)")
    p.add_argument("--checkpoint", help="resume file holding the last written key")
    p.add_argument("--limit", type=int, help="stop after this many records")
    p.add_argument("--figure", help="also render a cusp-count histogram to this image file")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"{parser.prog} {args.command}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        # int() on malformed range text and similar
        print(f"{parser.prog} {args.command}: invalid value: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
