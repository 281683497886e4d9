"""Command-line front end.

Exit codes: 0 success, 1 a check failed (validate diagnostics, oracle
FAIL), 2 usage or input errors.  Output is deterministic: identical
inputs give byte-identical output.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import bounds, oracle
from .freegroup import word_from_ints
from .model import (
    Band,
    ParseError,
    RibbonCode,
    parse_ribbon_code,
    serialize_ribbon_code,
    stats,
    validate,
)
from .partitions import DiscPartition
from .reduction import reduce_code, render_trace

COUNTEREXAMPLE_FILE = "oracle-counterexample.rib"


def _load(path: str) -> RibbonCode:
    return parse_ribbon_code(Path(path).read_text(encoding="utf-8"))


def _cmd_validate(args: argparse.Namespace) -> int:
    try:
        code = _load(args.file)
    except ParseError as exc:
        print(str(exc))
        return 1
    diagnostics = validate(code)
    for diagnostic in diagnostics:
        print(diagnostic)
    return 1 if diagnostics else 0


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _cmd_stats(args: argparse.Namespace) -> int:
    s = stats(_load(args.file))
    parts = [
        f"d={s.d}",
        f"b={s.b}",
        f"components={s.components}",
        f"chi={s.chi}",
        f"connected={_bool(s.connected)}",
    ]
    if s.double_genus is not None:
        parts.append(f"double_genus={s.double_genus}")
    print(" ".join(parts))
    return 0


def _cmd_bound(args: argparse.Namespace) -> int:
    code = _load(args.file)
    if args.refined:
        report = bounds.bound_report(code, heuristic=args.heuristic)
        sys.stdout.write(bounds.render_report(report))
    else:
        print(f"theorem2={bounds.band_count_bound(code)}")
    return 0


def _cmd_reduce(args: argparse.Namespace) -> int:
    code = _load(args.file)
    partition = DiscPartition.parse(args.partition, code.d)
    for trace in reduce_code(code, partition):
        print(render_trace(trace))
    return 0


def _write_counterexample(code: RibbonCode) -> str:
    Path(COUNTEREXAMPLE_FILE).write_text(serialize_ribbon_code(code), encoding="utf-8")
    return COUNTEREXAMPLE_FILE


def _sweep_checks(corpus_size: int) -> int:
    failures = 0

    checked, bad = oracle.confluence_sweep()
    if bad:
        failures += 1
        # Rebuild the failing instance as a one-band code; classes are
        # discs under the discrete partition.
        ints, start, end = bad[0]
        witness = RibbonCode(3, (Band("W1", start, end, word_from_ints(*ints)),))
        path = _write_counterexample(witness)
        print(
            f"FAIL confluence-sweep checked={checked} failures={len(bad)} "
            f"counterexample={path}"
        )
    else:
        print(f"PASS confluence-sweep checked={checked}")

    codes = oracle.standard_corpus(corpus_size)
    mismatches = []
    for code in codes:
        refined = bounds.refined_bound(code).genus_bound
        brute = oracle.brute_refined(code)
        if refined != brute:
            mismatches.append((code, refined, brute))
    if mismatches:
        failures += 1
        code, refined, brute = mismatches[0]
        path = _write_counterexample(code)
        print(
            f"FAIL corpus-equivalence checked={len(codes)} mismatches={len(mismatches)} "
            f"first refined={refined} brute={brute} counterexample={path}"
        )
    else:
        print(f"PASS corpus-equivalence checked={len(codes)}")

    return 1 if failures else 0


def _file_checks(code: RibbonCode) -> int:
    failures = 0

    certificate = bounds.refined_bound(code)
    refined = certificate.genus_bound
    brute = oracle.brute_refined(code)
    if refined == brute:
        print(f"PASS refined-vs-brute refined={refined} brute={brute}")
    else:
        failures += 1
        path = _write_counterexample(code)
        print(
            f"FAIL refined-vs-brute refined={refined} brute={brute} "
            f"counterexample={path}"
        )

    replayed = reduce_code(code, certificate.partition)
    connected = bounds.class_graph_connected(code, certificate.partition)
    if connected and all(trace.cancellable for trace in replayed):
        print(f"PASS certificate-replay partition={certificate.partition.format()}")
    else:
        failures += 1
        path = _write_counterexample(code)
        print(f"FAIL certificate-replay counterexample={path}")

    for band in code.bands:
        if len(band.word) > oracle.CONFLUENCE_MAX_LEN:
            print(f"SKIP confluence {band.id} (word longer than {oracle.CONFLUENCE_MAX_LEN})")
            continue
        if oracle.confluence_check(band, certificate.partition):
            print(f"PASS confluence {band.id}")
        else:
            failures += 1
            path = _write_counterexample(code)
            print(f"FAIL confluence {band.id} counterexample={path}")

    return 1 if failures else 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    if bool(args.file) == args.sweep:
        print("error: give a code file or --sweep, not both", file=sys.stderr)
        return 2
    if args.sweep:
        return _sweep_checks(args.corpus)
    code = _load(args.file)
    if code.d > oracle.BRUTE_MAX_DISCS:
        print(
            f"error: brute-force sweep limited to d <= {oracle.BRUTE_MAX_DISCS}, "
            f"got {code.d}",
            file=sys.stderr,
        )
        return 2
    return _file_checks(code)


def _cmd_gen(args: argparse.Namespace) -> int:
    spec = oracle.GenSpec(seed=args.seed, d=args.d, b=args.b, max_word_len=args.maxlen)
    code = oracle.random_code(spec)
    text = serialize_ribbon_code(code)
    if not stats(code).connected:
        text = "# disconnected code: boundary is a link, bound commands refuse it\n" + text
    sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ribbonbound",
        description=(
            "Disc-band ribbon codes: surface statistics, cancellation traces, "
            "and certified upper bounds on double slice genus."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a code file and print diagnostics")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("stats", help="surface statistics of the code and its double")
    p.add_argument("file")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser(
        "bound", help="genus bounds; --refined adds the partition search certificate"
    )
    p.add_argument("file")
    p.add_argument("--refined", action="store_true", help="search disc partitions")
    p.add_argument(
        "--heuristic",
        action="store_true",
        help="allow greedy search past the exhaustive disc limit",
    )
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("reduce", help="cancellation traces under a disc partition")
    p.add_argument("file")
    p.add_argument(
        "--partition",
        required=True,
        metavar="BLOCKS",
        help="blocks pipe-separated, members comma-separated, e.g. '1,3|2,4'",
    )
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("oracle", help="independent brute-force validators")
    p.add_argument("file", nargs="?")
    p.add_argument("--sweep", action="store_true", help="run the file-free sweep checks")
    p.add_argument(
        "--corpus", type=int, default=200, help="corpus size for the sweep (default 200)"
    )
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("gen", help="emit a pseudorandom code file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--d", type=int, default=4)
    p.add_argument("--b", type=int, default=3)
    p.add_argument("--maxlen", type=int, default=2)
    p.set_defaults(func=_cmd_gen)

    return parser


def run(argv: Sequence[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        code = exc.code
        if isinstance(code, int):
            return code
        return 0 if code is None else 2
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
