"""Command-line front end.

Exit codes: 0 ok, 1 parse error, 2 size exceeded, 3 bad ordering,
4 verification failure, 5 not a basis.
"""

from __future__ import annotations

import argparse
import csv
import statistics
import sys
import time
from pathlib import Path
from typing import Sequence

from . import engines as eng
from .errors import (ActivityTransferViolation, DecompositionNotUnique,
                     InvalidOrdering, NotABasis, SizeExceeded)
from .io import ParseError, load_matroid
from .matroid import Matroid, elements, to_mask
from .verify import FAIL, run_checks

EXIT_OK, EXIT_PARSE, EXIT_SIZE, EXIT_ORDER, EXIT_VERIFY, EXIT_BASIS = range(6)

BENCH_HEADER = ["matroid", "engine", "n", "reps", "median_ns", "terms", "agree"]


def fmt_set(mask: int) -> str:
    return "{" + ",".join(str(e) for e in elements(mask)) + "}"


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _caps_help() -> str:
    caps = ", ".join(f"{e.value} n<={c}" for e, c in eng.SIZE_CAPS.items())
    return f"engine size caps: {caps}"


# ---------------------------------------------------------------------------
# subcommands


def cmd_tutte(args, out) -> int:
    M = load_matroid(args.file)
    order = eng.check_ordering(args.order, M.n)
    print(eng.tutte(M, args.engine, order), file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    M = load_matroid(args.file)
    failed = False
    for res in run_checks(M):
        print(res.line(), file=out)
        failed |= res.status == FAIL
    return EXIT_VERIFY if failed else EXIT_OK


def cmd_info(args, out) -> int:
    M = load_matroid(args.file)
    loops, isth = M.loops_and_isthmuses()
    flats = M.flats()
    free = M.flats(isthmus_free_only=True)
    spec = eng.specializations(M)

    def listing(masks: list[int]) -> str:
        if len(masks) > 32:
            return str(len(masks))
        return f"{len(masks)} [" + ", ".join(fmt_set(f) for f in masks) + "]"

    print(f"elements: {M.n}", file=out)
    print(f"rank: {M.full_rank}", file=out)
    print(f"bidegree: ({M.full_rank}, {M.corank})", file=out)
    print(f"bases: {len(M.bases())}", file=out)
    print(f"loops: {fmt_set(loops)}", file=out)
    print(f"isthmuses: {fmt_set(isth)}", file=out)
    print(f"flats: {listing(flats)}", file=out)
    print(f"isthmus-free flats: {listing(free)}", file=out)
    print(f"T(1,1) bases: {spec.bases}", file=out)
    print(f"T(2,1) independent sets: {spec.independent_sets}", file=out)
    print(f"T(1,2) spanning sets: {spec.spanning_sets}", file=out)
    print(f"T(2,2) subsets: {spec.subsets}", file=out)
    return EXIT_OK


def cmd_decompose(args, out) -> int:
    M = load_matroid(args.file)
    order = eng.check_ordering(args.order, M.n)
    if any(not 0 <= e < M.n for e in args.basis) or len(set(args.basis)) != len(args.basis):
        raise NotABasis(f"{args.basis} is not a subset of the ground set")
    B = to_mask(args.basis)
    d = eng.decompose_basis(M, order, B)
    print(f"basis: {fmt_set(d.basis)}", file=out)
    print(f"B1: {fmt_set(d.b1)}", file=out)
    print(f"B2: {fmt_set(d.b2)}", file=out)
    print(f"V: {fmt_set(d.flat)}", file=out)
    print(f"internally active in M: {fmt_set(d.internally_active)}", file=out)
    print(f"externally active in M: {fmt_set(d.externally_active)}", file=out)
    print(f"internally active in M/V (B2): {fmt_set(d.b2_internal_in_contraction)}", file=out)
    print(f"externally active in V (B1): {fmt_set(d.b1_external_in_restriction)}", file=out)
    print("activity transfer: verified", file=out)
    return EXIT_OK


def _time_engine(M: Matroid, engine: eng.TutteEngine, reps: int):
    times = []
    result = None
    for _ in range(reps):
        t0 = time.perf_counter_ns()
        result = eng.tutte(M, engine)
        times.append(time.perf_counter_ns() - t0)
    return int(statistics.median(times)), result


def bench_rows(directory: Path, engines: Sequence[eng.TutteEngine], reps: int):
    files = sorted(Path(directory).glob("*.json"))
    for path in files:
        M = load_matroid(path)
        reference = eng.reference_tutte(M)
        for engine in sorted(engines, key=lambda e: e.value):
            if not eng.within_cap(engine, M):
                yield [path.stem, engine.value, M.n, reps, "skipped", "skipped", "skipped"]
                continue
            ns, result = _time_engine(M, engine, reps)
            yield [path.stem, engine.value, M.n, reps, ns, len(result),
                   "true" if result == reference else "false"]


def cmd_bench(args, out) -> int:
    directory = Path(args.dir)
    if not directory.is_dir():
        raise ParseError(f"{directory} is not a directory")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(BENCH_HEADER)
    for row in bench_rows(directory, args.engines, args.reps):
        writer.writerow(row)
        out.flush()
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point


def _engine_list(text: str) -> list[eng.TutteEngine]:
    try:
        return [eng.TutteEngine(t.strip()) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="tutteconv",
        description="Exact Tutte polynomials of matroids and checks of convolution identities.",
        epilog=_caps_help(),
    )
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("tutte", help="print the Tutte polynomial", epilog=_caps_help())
    t.add_argument("file")
    t.add_argument("--engine", default="ranksum", choices=[e.value for e in eng.TutteEngine])
    t.add_argument("--order", type=_int_list, default=None,
                   help="element ordering for the activities engine, smallest first")
    t.set_defaults(func=cmd_tutte)

    v = sub.add_parser("verify", help="run the identity suite")
    v.add_argument("file")
    v.set_defaults(func=cmd_verify)

    i = sub.add_parser("info", help="basic invariants")
    i.add_argument("file")
    i.set_defaults(func=cmd_info)

    d = sub.add_parser("decompose", help="split a basis by activities")
    d.add_argument("file")
    d.add_argument("--basis", type=_int_list, required=True)
    d.add_argument("--order", type=_int_list, default=None)
    d.set_defaults(func=cmd_decompose)

    b = sub.add_parser("bench", help="time engines over a directory of matroid files",
                       epilog=_caps_help())
    b.add_argument("dir")
    b.add_argument("--engines", type=_engine_list, default=list(eng.TutteEngine))
    b.add_argument("--reps", type=int, default=3)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SizeExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except InvalidOrdering as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ORDER
    except NotABasis as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BASIS
    except (DecompositionNotUnique, ActivityTransferViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
