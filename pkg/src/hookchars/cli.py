"""Command-line front end.

Exit codes: 0 when every requested check passes, 1 when a check fails,
2 for usage errors, 3 when a resource ceiling stops the run.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import characters
from .characters import CharacterCache, character_table
from .identities import (
    CSV_HEADER,
    VerificationReport,
    verify_21_corollary,
    verify_classical,
    verify_hook_sum,
    verify_main_identity,
)
from .limits import ResourceLimitError
from .partitions import parse_shape, partitions_of
from .tableaux import count_ssyt, count_super_ssyt, enumerate_super_ssyt
from .tensor import rhs_product, trace_super

CHECKS = ("main", "hook-sum", "corollary", "classical")


class UsageError(Exception):
    pass


def parse_range(text: str) -> range:
    """``"4"`` or ``"1..8"`` (inclusive) into a non-empty range."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or a..b, got {text!r}") from None
    if lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"empty or negative range {text!r}")
    return range(lo, hi + 1)


def _shape(text: str):
    try:
        return parse_shape(text)
    except (ValueError, TypeError) as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hookchars", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="print the character table of S_n")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--format", choices=("json", "csv", "latex", "plain"), default="plain")
    t.add_argument("--cache", metavar="PATH")
    t.add_argument("--jobs", type=int, default=1)

    v = sub.add_parser("verify", help="run identity checks over a grid")
    v.add_argument("--n", type=parse_range, required=True)
    v.add_argument("--k", type=parse_range, default=range(1, 2))
    v.add_argument("--l", type=parse_range, default=range(1, 2))
    v.add_argument("--check", choices=CHECKS, action="append",
                   help="restrict to these checks (repeatable; default: all)")
    v.add_argument("--format", choices=("json", "csv", "latex", "plain"), default="json")
    v.add_argument("--with-oracle", action="store_true", help="attach brute-force traces")
    v.add_argument("--cache", metavar="PATH")
    v.add_argument("--jobs", type=int, default=1)

    c = sub.add_parser("count", help="count (k,l)-semistandard tableaux of a shape")
    c.add_argument("--shape", type=_shape, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--l", type=int, default=0)
    c.add_argument("--list", action="store_true", help="print each tableau as JSON")

    o = sub.add_parser("oracle", help="brute-force trace on the graded tensor space")
    o.add_argument("--mu", type=_shape)
    o.add_argument("--n", type=int, help="run every cycle type of n instead of one --mu")
    o.add_argument("--k", type=int, required=True)
    o.add_argument("--l", type=int, required=True)

    m = sub.add_parser("cache", help="inspect or manage the character-table cache")
    m.add_argument("action", choices=("info", "warm", "clear"))
    m.add_argument("--cache", metavar="PATH", required=True)
    m.add_argument("--n", type=parse_range, help="table sizes to warm")
    return p


def _seed_memo(cache: CharacterCache | None, ns) -> None:
    if cache is None:
        return
    for n in ns:
        try:
            table = character_table(n, cache)
        except ResourceLimitError:
            continue
        for (lam, mu), v in table.entries.items():
            characters._memo[(lam, tuple(mu))] = v


def cmd_table(args) -> int:
    cache = CharacterCache(args.cache) if args.cache else None
    table = character_table(args.n, cache, jobs=args.jobs)
    if cache is not None:
        cache.save()
    out = {"json": lambda: table.to_json() + "\n", "csv": table.to_csv,
           "latex": table.to_latex, "plain": table.to_plain}[args.format]()
    sys.stdout.write(out)
    return 0


def run_grid(ns, ks, ls, checks, with_oracle: bool, jobs: int) -> list[VerificationReport]:
    reports = []
    for n in ns:
        if "main" in checks:
            for k in ks:
                for l in ls:
                    reports.append(verify_main_identity(n, k, l, with_oracle=with_oracle, jobs=jobs))
        if "hook-sum" in checks and n >= 1:
            reports.append(verify_hook_sum(n, jobs=jobs))
        if "corollary" in checks and n >= 2:
            reports.append(verify_21_corollary(n, jobs=jobs))
        if "classical" in checks:
            for k in ks:
                reports.append(verify_classical(n, k, with_oracle=with_oracle, jobs=jobs))
    return reports


def cmd_verify(args) -> int:
    checks = set(args.check or CHECKS)
    cache = CharacterCache(args.cache) if args.cache else None
    _seed_memo(cache, args.n)
    reports = run_grid(args.n, args.k, args.l, checks, args.with_oracle, args.jobs)
    if cache is not None:
        cache.save()
    ok = all(r.all_pass for r in reports)
    if args.format == "json":
        sys.stdout.write(json.dumps({"all_pass": ok, "reports": [r.to_dict() for r in reports]},
                                    sort_keys=True) + "\n")
    elif args.format == "csv":
        sys.stdout.write(",".join(CSV_HEADER) + "\n")
        for r in reports:
            sys.stdout.write(r.to_csv(header=False))
    elif args.format == "latex":
        sys.stdout.write("\n".join(r.to_latex() for r in reports))
    else:
        for r in reports:
            sys.stdout.write(r.to_plain())
        sys.stdout.write(f"{'ALL PASS' if ok else 'FAILURES'}: {len(reports)} reports\n")
    return 0 if ok else 1


def cmd_count(args) -> int:
    if args.k < 0 or args.l < 0:
        raise UsageError("--k and --l must be non-negative")
    if args.list:
        for t in enumerate_super_ssyt(args.shape, args.k, args.l):
            sys.stdout.write(t.to_json() + "\n")
        return 0
    n = count_ssyt(args.shape, args.k) if args.l == 0 else count_super_ssyt(args.shape, args.k, args.l)
    sys.stdout.write(f"{n}\n")
    return 0


def cmd_oracle(args) -> int:
    if (args.mu is None) == (args.n is None):
        raise UsageError("give exactly one of --mu or --n")
    mus = [args.mu] if args.mu is not None else partitions_of(args.n)
    ok = True
    for mu in mus:
        trace = trace_super(mu, args.k, args.l)
        rhs = rhs_product(mu, args.k, args.l)
        ok &= trace == rhs
        rec = {"mu": list(mu), "k": args.k, "l": args.l, "trace": trace, "rhs": rhs, "match": trace == rhs}
        sys.stdout.write(json.dumps(rec, sort_keys=True) + "\n")
    return 0 if ok else 1


def cmd_cache(args) -> int:
    cache = CharacterCache(args.cache)
    if args.action == "clear":
        cache.clear()
    elif args.action == "warm":
        if args.n is None:
            raise UsageError("cache warm needs --n")
        for n in args.n:
            character_table(n, cache)
        cache.save()
    info = {"path": cache.path, "version": characters.CACHE_VERSION,
            "tables": sorted(cache._tables), "readonly": cache.readonly}
    sys.stdout.write(json.dumps(info, sort_keys=True) + "\n")
    return 0


COMMANDS = {"table": cmd_table, "verify": cmd_verify, "count": cmd_count,
            "oracle": cmd_oracle, "cache": cmd_cache}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return COMMANDS[args.command](args)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"error: {e}\n")
        return 2
    except ValueError as e:
        sys.stderr.write(f"error: {e}\n")
        return 2
    except ResourceLimitError as e:
        sys.stderr.write(f"resource limit: {e}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
