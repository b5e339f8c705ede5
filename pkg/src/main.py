"""Command-line front end: ``isoword check|border|enumerate|verify|bench``.

Exit codes: 0 isometric / agreement / success, 1 not isometric / disagreement,
2 usage or input error. Reports go to standard output (``--json`` for the
stable machine form), logs and errors to standard error.
"""

import argparse
import itertools
import json
import logging
import sys

from tabulate import tabulate

from src import settings
from src.bench import run_benchmark, scan_ratios
from src.borders import BorderReport, find_k_error_borders, find_k_lee_error_borders
from src.cube import sweep_embedding
from src.errors import IsowordError, UnsupportedAlphabetSize, UsageError
from src.isometry import is_isometric
from src.lce import build_index
from src.metric import ExitCode, Metric, SuffixArrayMethod
from src.words import Alphabet, Word, make_word

logger = logging.getLogger(__name__)

MAX_ORACLE_LEE_ALPHABET = 8


def configure_logging(verbose: bool):
    if verbose:
        level = logging.DEBUG
    else:
        level = logging.getLevelNamesMapping().get(settings.LOG_LEVEL, logging.WARNING)
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )


def emit_json(data: dict):
    print(json.dumps(data, sort_keys=True))


def _non_negative(raw: str) -> int:
    value = int(raw)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {raw}")
    return value


def _positive(raw: str) -> int:
    value = int(raw)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {raw}")
    return value


def parse_n_range(raw: str) -> range:
    """``"4..6"`` -> range(4, 7); a single ``"6"`` -> range(6, 7)."""
    try:
        if ".." in raw:
            lo, hi = (int(part) for part in raw.split("..", 1))
        else:
            lo = hi = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected <a>..<b>, got {raw!r}") from None
    if lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"empty or negative range {raw!r}")
    return range(lo, hi + 1)


def parse_sizes(raw: str) -> list[int]:
    """``"16..20"`` -> powers of two 2**16 .. 2**20; ``"1000,5000"`` -> as listed."""
    if ".." in raw:
        return [1 << e for e in parse_n_range(raw)]
    try:
        sizes = [int(part) for part in raw.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected sizes like 16..20 or 1000,2000, got {raw!r}"
        ) from None
    if not sizes or min(sizes) < 1:
        raise argparse.ArgumentTypeError(f"sizes must be positive, got {raw!r}")
    return sizes


def resolve_alphabet(args) -> tuple[Alphabet, int]:
    if args.alphabet is not None:
        alphabet = Alphabet.parse(args.alphabet)
    else:
        alphabet = Alphabet.cyclic(args.d if args.d is not None else 2)
    d = args.d if args.d is not None else alphabet.size
    if d < 1:
        raise UsageError(f"--d must be positive, got {d}")
    return alphabet, d


def _excerpt(u: Word, length: int) -> tuple[str, str]:
    text = u.text
    return text[:length], text[len(text) - length :]


def cmd_check(args) -> ExitCode:
    alphabet, d = resolve_alphabet(args)
    f = make_word(args.word, alphabet)
    verdict = is_isometric(f, args.metric, d, args.method)

    if args.json:
        emit_json(verdict.to_dict(f))
    else:
        state = "isometric" if verdict.isometric else "not isometric"
        print(f"{f.text} ({verdict.metric.value}): {state}")
        if verdict.witness is not None:
            w = verdict.witness
            prefix, suffix = _excerpt(f, w.length)
            kind = "Lee-error" if verdict.metric is Metric.lee else "error"
            print(
                f"witness: 2-{kind} border of length {w.length}, "
                f"mismatch positions {list(w.positions)}"
            )
            print(f"  prefix {prefix}")
            print(f"  suffix {suffix}")
    return ExitCode.ok if verdict.isometric else ExitCode.negative


def border_report(f: Word, k: int, metric: Metric, d: int, method=None) -> BorderReport:
    index = build_index(f, method)
    if metric is Metric.lee:
        return find_k_lee_error_borders(f, k, d, index)
    return find_k_error_borders(f, k, index)


def cmd_border(args) -> ExitCode:
    alphabet, d = resolve_alphabet(args)
    if args.metric is Metric.lee and d > MAX_ORACLE_LEE_ALPHABET:
        raise UsageError(f"--metric lee supports d <= {MAX_ORACLE_LEE_ALPHABET} here, got {d}")
    f = make_word(args.word, alphabet)
    report = border_report(f, args.k, args.metric, d, args.method)

    if args.json:
        emit_json(
            {
                "word": f.text,
                "k": args.k,
                "metric": args.metric.value,
                "borders": [entry.to_dict() for entry in report.borders],
            }
        )
        return ExitCode.ok

    kind = "Lee-error" if args.metric is Metric.lee else "error"
    print(f"{args.k}-{kind} borders of {f.text} ({args.metric.value}): {len(report.borders)}")
    if report:
        rows = []
        for entry in report.borders:
            prefix, suffix = _excerpt(f, entry.length)
            rows.append([entry.length, list(entry.positions), prefix, suffix])
        print(tabulate(rows, headers=["length", "positions", "prefix", "suffix"]))
    return ExitCode.ok


def cmd_enumerate(args) -> ExitCode:
    alphabet, d = resolve_alphabet(args)
    words: list[str] = []
    counts = []
    for length in range(1, args.maxlen + 1):
        found = 0
        for codes in itertools.product(range(alphabet.size), repeat=length):
            w = Word(bytes(codes), alphabet)
            if not is_isometric(w, args.metric, d).isometric:
                words.append(w.text)
                found += 1
        counts.append({"length": length, "count": found})

    if args.json:
        emit_json(
            {
                "alphabet": alphabet.symbols,
                "metric": args.metric.value,
                "maxlen": args.maxlen,
                "counts": counts,
                "words": words,
            }
        )
        return ExitCode.ok

    for w in words:
        print(w)
    table = [[c["length"], c["count"]] for c in counts]
    print(tabulate(table, headers=["length", "not isometric"]))
    return ExitCode.ok


def cmd_verify(args) -> ExitCode:
    alphabet, d = resolve_alphabet(args)
    if args.metric is Metric.lee and d > MAX_ORACLE_LEE_ALPHABET:
        raise UsageError(f"--metric lee supports d <= {MAX_ORACLE_LEE_ALPHABET} here, got {d}")
    f = make_word(args.word, alphabet)
    n_values = args.n if args.n is not None else range(len(f), len(f) + 4)

    try:
        verdict = is_isometric(f, args.metric, d)
    except UnsupportedAlphabetSize:
        verdict = None
    sweep = sweep_embedding(f, d, args.metric, n_values, args.budget)

    if verdict is None:
        agrees = None
    elif verdict.isometric:
        agrees = sweep.first_failure is None
    else:
        # Failing n may lie beyond the sweep; that is not a contradiction.
        agrees = True

    if args.json:
        emit_json(
            {
                "word": f.text,
                "metric": args.metric.value,
                "isometric": None if verdict is None else verdict.isometric,
                "results": [result.to_dict() for result in sweep.results],
                "first_failure": sweep.first_failure,
                "agrees": agrees,
            }
        )
    else:
        if verdict is None:
            print(f"{f.text} ({args.metric.value}, d={d}): no characterization, oracle only")
        else:
            state = "isometric" if verdict.isometric else "not isometric"
            print(f"{f.text} ({args.metric.value}, d={d}): characterization says {state}")
        rows = []
        for result in sweep.results:
            w = result.witness
            shown = ""
            if w is not None:
                shown = f"{w.u} -> {w.v} ({w.host_distance} vs {w.subgraph_distance})"
            rows.append([result.n, result.vertices, result.isometric, shown])
        print(tabulate(rows, headers=["n", "vertices", "isometric", "witness"]))
        if verdict is not None and not verdict.isometric and sweep.first_failure is None:
            print(f"no failure found up to n={max(n_values)}")
        if agrees is not None:
            print("oracle agrees" if agrees else "oracle DISAGREES with the characterization")

    return ExitCode.negative if agrees is False else ExitCode.ok


def cmd_bench(args) -> ExitCode:
    rows = run_benchmark(args.sizes, args.k, args.seed, args.repeat, args.method)
    if args.json:
        emit_json(
            {
                "seed": args.seed,
                "k": args.k,
                "repeat": args.repeat,
                "rows": [row.to_dict() for row in rows],
            }
        )
        return ExitCode.ok

    print(f"seed: {args.seed}  k: {args.k}  repeat: {args.repeat}")
    ratios = [""] + [f"{r:.2f}" for r in scan_ratios(rows)]
    table = [
        [row.n, row.build_ms, row.scan_ms, row.lce_queries, ratio]
        for row, ratio in zip(rows, ratios)
    ]
    print(tabulate(table, headers=["n", "build_ms", "scan_ms", "lce_queries", "scan ratio"]))
    return ExitCode.ok


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the stable JSON report")
    common.add_argument("--verbose", "-v", action="store_true", help="debug logging on stderr")

    words = argparse.ArgumentParser(add_help=False)
    words.add_argument("--alphabet", help="symbols in code order, e.g. 0123 (default: Z_d digits)")
    words.add_argument("--d", type=_positive, help="alphabet size (default: size of --alphabet)")
    words.add_argument("--metric", type=Metric, choices=list(Metric), default=Metric.hamming)

    method = argparse.ArgumentParser(add_help=False)
    method.add_argument(
        "--method",
        type=SuffixArrayMethod,
        choices=list(SuffixArrayMethod),
        default=None,
        help="suffix array construction (default: ISOWORD_SUFFIX_ARRAY or doubling)",
    )

    parser = argparse.ArgumentParser(
        prog="isoword", description="Hamming- and Lee-isometric word checks"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser("check", parents=[common, words, method], help="isometry verdict")
    check.add_argument("word")
    check.set_defaults(handler=cmd_check)

    border = commands.add_parser("border", parents=[common, words, method], help="k-error borders")
    border.add_argument("word")
    border.add_argument("--k", type=_non_negative, default=2)
    border.set_defaults(handler=cmd_border)

    enumerate_ = commands.add_parser(
        "enumerate", parents=[common, words], help="all non-isometric words up to a length"
    )
    enumerate_.add_argument("--maxlen", type=_non_negative, required=True)
    enumerate_.set_defaults(handler=cmd_enumerate)

    verify = commands.add_parser(
        "verify", parents=[common, words], help="cross-check against the cube oracle"
    )
    verify.add_argument("word")
    verify.add_argument("--n", type=parse_n_range, help="word lengths to test, e.g. 4..6")
    verify.add_argument("--budget", type=_positive, default=settings.VERTEX_BUDGET)
    verify.set_defaults(handler=cmd_verify)

    bench = commands.add_parser("bench", parents=[common, method], help="scaling benchmark")
    bench.add_argument("--sizes", type=parse_sizes, default=parse_sizes("10..14"))
    bench.add_argument("--k", type=_non_negative, default=2)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--repeat", type=_positive, default=5)
    bench.set_defaults(handler=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return ExitCode.ok if exc.code in (0, None) else ExitCode.error

    configure_logging(args.verbose)
    try:
        return int(args.handler(args))
    except IsowordError as e:
        print(f"error: {e}", file=sys.stderr)
        return ExitCode.error
    except Exception:
        logger.exception("%s failed", args.command)
        return ExitCode.error


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
