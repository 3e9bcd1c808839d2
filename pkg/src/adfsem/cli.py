"""Command-line front end (``adf``)."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from ._mode import oracle_paths
from .errors import CapExceededError, InstanceError, ParseError
from .extensions import DEFAULT_MAX_STATEMENTS, SEMANTICS, enumerate_extensions
from .labelings import DEFAULT_MAX_LABELING_STATEMENTS, LABELING_SEMANTICS, labelings
from .model import AdfInstance, format_adf, from_dung_af, parse_adf, parse_af
from .verify import DEFAULT_VERIFY_CAP, Report, check_oracle_equivalence, random_instance, run_theorem_suite

EXIT_USAGE, EXIT_PARSE, EXIT_CAP, EXIT_VERIFY = 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> tuple[str, str]:
    if path == "-":
        return sys.stdin.read(), "stdin"
    try:
        return Path(path).read_text(), Path(path).stem
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str) -> AdfInstance:
    text, name = _read(path)
    return parse_adf(text, name=name)


def _names(raw: str | None, allowed: tuple[str, ...], default: tuple[str, ...]) -> list[str]:
    if not raw:
        return list(default)
    names = [n.strip() for n in raw.split(",") if n.strip()]
    unknown = [n for n in names if n not in allowed]
    if unknown:
        raise UsageError(f"unknown semantics: {', '.join(unknown)} (choose from {', '.join(allowed)})")
    return names


def _emit_json(doc) -> None:
    sys.stdout.write(json.dumps(doc) + "\n")


def _fmt_set(ext) -> str:
    return "{" + ",".join(ext) + "}"


def cmd_solve(args) -> int:
    D = _load(args.instance)
    names = _names(args.semantics, SEMANTICS, SEMANTICS)
    with oracle_paths(args.oracle):
        results = [(n, enumerate_extensions(D, n, max_statements=args.max_statements or DEFAULT_MAX_STATEMENTS,
                                            jobs=args.jobs)) for n in names]
    if args.format == "json":
        docs = [{"instance": D.name, "semantics": n, "extensions": [list(e) for e in exts]} for n, exts in results]
        _emit_json(docs[0] if len(docs) == 1 else {"instance": D.name, "results": docs})
        return 0
    for n, exts in results:
        if len(results) > 1:
            print(f"[{n}]")
        for e in exts:
            print(_fmt_set(e))
    return 0


def cmd_labelings(args) -> int:
    D = _load(args.instance)
    names = _names(args.semantics, LABELING_SEMANTICS, ("preferred",))
    cap = args.max_statements or DEFAULT_MAX_LABELING_STATEMENTS
    with oracle_paths(args.oracle):
        results = [(n, labelings(D, n, max_statements=cap)) for n in names]
    if args.format == "json":
        docs = [{"instance": D.name, "semantics": n, "labelings": [v.as_dict() for v in labs]} for n, labs in results]
        _emit_json(docs[0] if len(docs) == 1 else {"instance": D.name, "results": docs})
        return 0
    for n, labs in results:
        if len(results) > 1:
            print(f"[{n}]")
        for v in labs:
            print(v)
    return 0


def cmd_verify(args) -> int:
    cap = args.max_statements or DEFAULT_VERIFY_CAP
    if args.instance is None and not args.random:
        raise UsageError("give an instance file or --random COUNT")
    instances = []
    if args.instance is not None:
        instances.append(_load(args.instance))
    for k in range(args.random or 0):
        instances.append(random_instance(1 + k % args.size, args.seed + k, args.density))
    report = Report()
    for D in instances:
        report.extend(run_theorem_suite(D, max_statements=cap))
        if args.oracle:
            report.extend(check_oracle_equivalence(D))
    if args.format == "json":
        sys.stdout.write(report.to_json() + "\n")
    else:
        print(report.to_text())
    return 0 if report.ok else EXIT_VERIFY


def cmd_convert(args) -> int:
    text, name = _read(args.af)
    sys.stdout.write(format_adf(from_dung_af(parse_af(text), name=name)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="adf", description="Semantics of abstract dialectical frameworks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, cap_help):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--max-statements", type=int, default=None, metavar="N", help=cap_help)
        p.add_argument("--oracle", action="store_true", help="use definitional (unoptimized) evaluation paths")

    p = sub.add_parser("solve", help="enumerate extensions")
    p.add_argument("instance", help="instance file, or - for stdin")
    p.add_argument("--semantics", help="comma-separated: " + ", ".join(SEMANTICS) + " (default: all)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for the subset scan")
    common(p, f"subset-scan cap (default {DEFAULT_MAX_STATEMENTS})")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("labelings", help="enumerate labelings")
    p.add_argument("instance")
    p.add_argument("--semantics", help="comma-separated: " + ", ".join(LABELING_SEMANTICS) + " (default: preferred)")
    common(p, f"labeling-scan cap (default {DEFAULT_MAX_LABELING_STATEMENTS})")
    p.set_defaults(func=cmd_labelings)

    p = sub.add_parser("verify", help="run the theorem suite")
    p.add_argument("instance", nargs="?")
    p.add_argument("--random", type=int, default=0, metavar="COUNT", help="also check COUNT random instances")
    p.add_argument("--size", type=int, default=5, help="largest random instance size (default 5)")
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    common(p, f"verification cap (default {DEFAULT_VERIFY_CAP})")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("convert", help="translate a Dung AF (arg/att facts) into an ADF")
    p.add_argument("af")
    p.set_defaults(func=cmd_convert)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"adf: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, InstanceError) as exc:
        print(f"adf: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceededError as exc:
        print(f"adf: {exc}", file=sys.stderr)
        return EXIT_CAP


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
