"""Command-line interface.

Exit codes: 0 success, 1 a verification suite failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import datastore, stats, verify
from .composition import fast_min_weight
from .datastore import CacheError, ValueCache
from .solver import SolverSizeError, min_weight_with_witness

CHECKPOINT_EVERY = 16  # chunks


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {v}")
    return v


def _load_cache(path: str | None, required: bool = True) -> ValueCache | None:
    if path is None:
        if required:
            raise UsageError("--cache FILE is required")
        return None
    if not Path(path).is_file():
        raise UsageError(f"cache file not found: {path}")
    return datastore.load(path)


def cmd_compute(args) -> int:
    m, trace = fast_min_weight(args.n)
    print(f"M({args.n}) = {m}")
    if args.explain == "text":
        print(trace.render_text())
    elif args.explain == "lines":
        print(trace.render_lines())
    return 0


def cmd_witness(args) -> int:
    w = min_weight_with_witness(args.n)
    ok = w.verify()
    print(f"n = {w.n}")
    print(f"M(n) = {w.weight}")
    print("exponents: " + " ".join(map(str, w.exponents)))
    print(f"k = {w.multiplier}")
    terms = " + ".join(f"2^{a}" for a in reversed(w.exponents))
    print(f"check: {terms} = k * {w.n}  [{'ok' if ok else 'FAILED'}]")
    return 0 if ok else 1


def cmd_sweep(args) -> int:
    cache = _load_cache(args.resume) if args.resume else ValueCache()
    out = Path(args.out)
    seen = 0

    def checkpoint(partial: ValueCache) -> None:
        nonlocal seen
        seen += 1
        if seen % CHECKPOINT_EVERY == 0:
            datastore.save(partial, out)

    t0 = time.perf_counter()
    cache = datastore.sweep(1, args.max, args.threads, cache, on_chunk=checkpoint)
    datastore.save(cache, out)
    print(f"cache covers [1, {cache.max_n}] -> {out} ({time.perf_counter() - t0:.1f}s)")
    return 0


def cmd_stats_cav(args) -> int:
    cache = _load_cache(args.cache)
    st = stats.dyadic_stats(args.max_exp, cache)
    print(f"{'j':>3}  {'C_av':>15} {'decimal':>9}  {'CO_av':>15} {'decimal':>9}")
    for j in range(1, args.max_exp + 1):
        c, co = st.cav(j), st.coav(j)
        print(f"{j:>3}  {str(c):>15} {stats.render(c):>9}  {str(co):>15} {stats.render(co):>9}")
    try:
        report = stats.telescoping_check(st)
    except stats.IdentityError as exc:
        print(f"identity check FAILED: {exc}")
        return 1
    print(report.summary())
    if args.csv:
        stats.write_cav_csv(st, args.csv)
    return 0


def cmd_stats_mav(args) -> int:
    cache = _load_cache(args.cache)
    avg = stats.running_average(args.at, cache)
    print(f"M_av({args.at}) = {avg} = {stats.render(avg)}")
    return 0


def cmd_primes_classify(args) -> int:
    cache = _load_cache(args.cache, required=False)
    records = stats.classify_primes(args.limit, cache)
    for k, ps in stats.prime_classes(records).items():
        head = ", ".join(map(str, ps[:8]))
        more = ", ..." if len(ps) > 8 else ""
        print(f"P_{k}: {len(ps)} primes  {{{head}{more}}}")
    h = stats.hasse_fraction(args.limit)
    print(
        f"even order: {h.even}/{h.total} = {stats.render(h.fraction)}"
        f"  (density {h.target} = {stats.render(h.target)})"
    )
    if args.csv:
        stats.write_prime_csv(records, args.csv)
    return 0


def cmd_sturdy(args) -> int:
    cache = _load_cache(args.cache)
    ns = stats.sturdy_numbers(args.limit, cache)
    print(f"{len(ns)} sturdy numbers <= {args.limit}")
    print(" ".join(map(str, ns)))
    if args.csv:
        stats.write_sturdy_csv(ns, cache, args.csv)
    return 0


def cmd_verify(args) -> int:
    cache = _load_cache(args.cache, required=False)
    res = verify.run_suite(args.suite, cache)
    for f in res.failures[:20]:
        print(f"  {f}")
    print(res.line())
    return 0 if res.passed else 1


def cmd_export_bfile(args) -> int:
    cache = _load_cache(args.cache)
    datastore.export_bfile(cache, args.out)
    print(f"wrote {cache.max_n} terms to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minhamming", description="Minimal Hamming weight of multiples, M(n)."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="print M(N)")
    p.add_argument("n", type=_positive, metavar="N")
    p.add_argument(
        "--explain", nargs="?", const="text", choices=["text", "lines"],
        help="show the reduction trace (text, or one machine-readable step per line)",
    )
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("witness", help="print a minimal-weight multiple of N")
    p.add_argument("n", type=_positive, metavar="N")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("sweep", help="build or extend a value cache")
    p.add_argument("--max", type=_positive, required=True)
    p.add_argument("--threads", type=_positive, default=1)
    p.add_argument("--out", required=True)
    p.add_argument("--resume")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("stats", help="dyadic and running averages")
    ssub = p.add_subparsers(dest="stats_command", required=True)
    q = ssub.add_parser("cav", help="C_av / CO_av table with identity check")
    q.add_argument("--max-exp", type=_positive, required=True)
    q.add_argument("--cache", required=True)
    q.add_argument("--csv")
    q.set_defaults(func=cmd_stats_cav)
    q = ssub.add_parser("mav", help="running average M_av(X)")
    q.add_argument("--at", type=_positive, required=True)
    q.add_argument("--cache", required=True)
    q.set_defaults(func=cmd_stats_mav)

    p = sub.add_parser("primes", help="prime classes")
    psub = p.add_subparsers(dest="primes_command", required=True)
    q = psub.add_parser("classify", help="partition primes by M(p); even-order density")
    q.add_argument("--limit", type=_positive, required=True)
    q.add_argument("--csv")
    q.add_argument("--cache")
    q.set_defaults(func=cmd_primes_classify)

    p = sub.add_parser("sturdy", help="list n <= L with M(n) = s2(n)")
    p.add_argument("--limit", type=_positive, required=True)
    p.add_argument("--cache", required=True)
    p.add_argument("--csv")
    p.set_defaults(func=cmd_sturdy)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", required=True, choices=sorted(verify.SUITES))
    p.add_argument("--cache")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="export cache data")
    esub = p.add_subparsers(dest="export_command", required=True)
    q = esub.add_parser("bfile", help="OEIS b-file (n M(n) per line)")
    q.add_argument("--cache", required=True)
    q.add_argument("--out", required=True)
    q.set_defaults(func=cmd_export_bfile)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, CacheError, SolverSizeError) as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
