"""Command-line front end.

Exit codes: 0 success, 1 usage or input errors, 2 when a requested value
needs surface data that has not been ingested.
"""

from __future__ import annotations

import argparse
import sys

from . import floor
from .combine import WelschingerQuery, gw_threefold, w_threefold
from .errors import DataUnavailableError, PezzoError
from .gw import gw_surface
from .lattice import FAMILIES, SURFACES
from .store import Store, InvariantKey, space_rank
from .tables import TABLES


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _parse_class(text: str) -> tuple:
    parts = text.split(",")
    out = []
    for token in parts:
        token = token.strip()
        try:
            out.append(int(token))
        except ValueError:
            raise _UsageError(
                f"invalid class component {token!r} in {text!r}"
            ) from None
    return tuple(out)


def _build_parser() -> _Parser:
    parser = _Parser(prog="pezzo", description=__doc__)
    parser.add_argument("--cache-dir", default=None,
                        help="persistent cache directory (or PEZZO_CACHE_DIR)")
    sub = parser.add_subparsers(dest="command", required=True)

    gw3 = sub.add_parser("gw3", help="complex count of a threefold class")
    gw3.add_argument("--family", required=True, choices=sorted(FAMILIES))
    gw3.add_argument("--class", dest="cls", required=True)

    gw2 = sub.add_parser("gw2", help="complex count of a surface class")
    gw2.add_argument("--surface", required=True, choices=sorted(SURFACES))
    gw2.add_argument("--class", dest="cls", required=True)
    gw2.add_argument("--dump-diagrams", action="store_true")

    w3 = sub.add_parser("w3", help="real signed count of a threefold class")
    w3.add_argument("--family", required=True, choices=sorted(FAMILIES))
    w3.add_argument("--class", dest="cls", required=True)
    w3.add_argument("--pairs", type=int, default=0)

    w2 = sub.add_parser("w2", help="real signed count of a surface class")
    w2.add_argument("--surface", required=True,
                    choices=sorted(SURFACES) + ["qx2t"])
    w2.add_argument("--class", dest="cls", required=True)
    w2.add_argument("--pairs", type=int, default=0)
    w2.add_argument("--dump-diagrams", action="store_true")

    table = sub.add_parser("table", help="reproduce a full invariant table")
    table.add_argument("kind", choices=sorted(TABLES))
    table.add_argument("--max-sum", type=int, default=None)
    table.add_argument("--max-d", type=int, default=None)
    table.add_argument("--max-a", type=int, default=None)
    table.add_argument("--format", dest="fmt", choices=("md", "csv"), default="md")

    ingest = sub.add_parser("ingest", help="load a CSV table of surface values")
    ingest.add_argument("--surface", required=True)
    ingest.add_argument("--file", required=True)

    cache = sub.add_parser("cache", help="cache control")
    cache.add_argument("action", choices=("info", "clear"))
    return parser


def _dump_diagrams(surface: str, cls: tuple, out) -> None:
    pc = floor.polygon_of(surface, cls)
    for diag in floor.enumerate_diagrams(pc):
        print(diag.dump_line(), file=out)


def _run(args, out) -> int:
    store = Store(cache_dir=args.cache_dir)
    if args.command == "gw3":
        print(gw_threefold(args.family, _parse_class(args.cls)), file=out)
        return 0
    if args.command == "gw2":
        cls = _parse_class(args.cls)
        if args.dump_diagrams:
            _dump_diagrams(args.surface, cls, out)
            pc = floor.polygon_of(args.surface, cls)
            print(floor.fd_count_complex(pc), file=out)
        else:
            print(gw_surface(args.surface, cls), file=out)
        return 0
    if args.command == "w3":
        query = WelschingerQuery(args.family, _parse_class(args.cls), args.pairs)
        try:
            print(w_threefold(query, store), file=out)
        except DataUnavailableError as exc:
            print("?", file=out)
            for key in exc.keys:
                print(f"missing: {key}", file=sys.stderr)
            return 2
        return 0
    if args.command == "w2":
        cls = _parse_class(args.cls)
        if args.dump_diagrams and args.surface != "qx2t":
            _dump_diagrams(args.surface, cls, out)
        key = InvariantKey("W", args.surface, cls, args.pairs)
        try:
            print(store.get_or_compute(key), file=out)
        except DataUnavailableError as exc:
            print("?", file=out)
            for missing in exc.keys:
                print(f"missing: {missing}", file=sys.stderr)
            return 2
        return 0
    if args.command == "table":
        kind = args.kind
        kwargs = {"fmt": args.fmt, "store": store}
        if kind == "gw-deg6":
            kwargs["max_sum"] = args.max_sum if args.max_sum is not None else 12
        elif kind == "w-deg6":
            kwargs["max_sum"] = args.max_sum if args.max_sum is not None else 15
        elif kind == "w-deg7":
            kwargs["max_d"] = args.max_d if args.max_d is not None else 9
        else:
            kwargs["max_a"] = args.max_a if args.max_a is not None else 5
        text, missing = TABLES[kind](**kwargs)
        out.write(text)
        return 2 if missing else 0
    if args.command == "ingest":
        space_rank(args.surface)  # validates the token
        report = store.ingest_csv(args.file, args.surface)
        print(f"inserted {report.inserted} row(s)", file=out)
        for lineno, reason in report.rejected:
            print(f"rejected line {lineno}: {reason}", file=sys.stderr)
        return 0
    if args.command == "cache":
        if args.action == "clear":
            removed = store.clear_cache()
            print(f"removed {removed} cache file(s)", file=out)
        else:
            print(f"cache dir: {store.cache_dir or '(memory only)'}", file=out)
            for space, count in sorted(store.spaces().items()):
                print(f"{space}: {count} entries", file=out)
        return 0
    raise _UsageError(f"unknown command {args.command!r}")


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _run(args, out)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except PezzoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
