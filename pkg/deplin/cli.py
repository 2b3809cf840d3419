import argparse
import logging
import sys
from collections.abc import Sequence
from dataclasses import replace
from pathlib import Path

from rich.console import Console
from rich.logging import RichHandler

from deplin import __version__
from deplin.baselines import EstimationMode, estimate_over_arrangements, estimate_over_trees
from deplin.config import DeplinConfig, load_config
from deplin.conllu import ConlluConverter, PreprocessOptions
from deplin.exceptions import (
    ConfigurationError,
    DeplinError,
    InputNotFoundError,
    KindMismatchError,
    ParseError,
    UnknownMetricError,
    WriteError,
)
from deplin.generate import (
    Constraint,
    TreeKind,
    exhaustive_trees,
    make_rng,
    random_tree,
)
from deplin.graphs import FreeTree, HeadVector, RootedTree, from_head_vector
from deplin.io import (
    DECODE_ERRORS,
    ErrorPolicy,
    FeatureSpec,
    ProcessingOptions,
    ProcessingReport,
    TreebankProcessor,
    get_metric,
    metric_names,
    parse_line,
)
from deplin.linarr import min_D_planar, min_D_projective, min_D_unconstrained
from deplin.properties import expected_C_unconstrained, expected_D_unconstrained
from deplin.utilities import IsomorphismMode, are_isomorphic

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_NOT_ISOMORPHIC = 3

BASELINES = (
    "Dmin_unconstrained",
    "Dmin_planar",
    "Dmin_projective",
    "ED_unconstrained",
    "EC_unconstrained",
    "estimate",
)

console = Console(stderr=True)
logger = logging.getLogger("deplin")


class UsageError(DeplinError):
    """Raised when command-line flags are inconsistent."""

    pass


def _setup_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[RichHandler(console=console, show_path=False)],
        force=True,
    )


def _error(error: Exception) -> None:
    console.print(f"Error: {error}", style="bold red", markup=False, highlight=False)


def _print_report(report: ProcessingReport) -> None:
    console.print(report.summary(), markup=False)
    for skipped in report.skipped:
        console.print(f"  line {skipped.line}: {skipped.reason}", style="yellow", markup=False)
    for path in report.missing:
        console.print(f"  missing: {path}", style="yellow", markup=False)


def _tree_arg(text: str) -> RootedTree:
    try:
        return from_head_vector(HeadVector.parse(text))
    except ParseError as e:
        raise UsageError(f"--tree {text!r}: {e}") from e


def _processing_options(args: argparse.Namespace, config: DeplinConfig) -> ProcessingOptions:
    return ProcessingOptions.from_config(
        config.analysis,
        error_policy=ErrorPolicy(args.policy) if args.policy else None,
        threads=args.threads,
        exact_rationals=True if args.exact else None,
    )


def _features(args: argparse.Namespace, config: DeplinConfig) -> FeatureSpec:
    if args.features:
        return FeatureSpec.parse(args.features)
    return FeatureSpec.from_names(config.analysis.features or None)


def cmd_analyze(args: argparse.Namespace, config: DeplinConfig) -> int:
    processor = TreebankProcessor(_features(args, config), _processing_options(args, config))
    _print_report(processor.process_treebank(args.input, args.output))
    return EXIT_OK


def cmd_collection(args: argparse.Namespace, config: DeplinConfig) -> int:
    options = _processing_options(args, config)
    if args.merge_out:
        options = replace(options, merge=True)
    processor = TreebankProcessor(_features(args, config), options)
    reports = processor.process_collection(args.list, args.merge_out or args.outdir)
    treebanks = sum(1 for r in reports if r.output_path is not None)
    console.print(f"{treebanks} treebanks processed")
    for report in reports:
        _print_report(report)
    return EXIT_OK


def cmd_convert(args: argparse.Namespace, config: DeplinConfig) -> int:
    conllu = config.conllu
    options = PreprocessOptions(
        remove_punct=args.remove_punct or conllu.remove_punct,
        remove_function_words=args.remove_function_words or conllu.remove_function_words,
        function_words=frozenset(conllu.function_words),
        min_len=args.min_len if args.min_len is not None else conllu.min_len,
        max_len=args.max_len if args.max_len is not None else conllu.max_len,
    )
    policy = ErrorPolicy(args.policy or config.analysis.error_policy)
    _print_report(ConlluConverter(options, policy).convert_file(args.input, args.output))
    return EXIT_OK


def _format_tree(tree: FreeTree | RootedTree) -> str:
    if isinstance(tree, RootedTree):
        return str(tree)
    return f"{tree.n}: {tree}"


def cmd_generate(args: argparse.Namespace, config: DeplinConfig) -> int:
    kind = TreeKind.parse(args.kind)
    if args.n < 1:
        raise UsageError(f"-n must be positive, got {args.n}")
    if args.exhaustive:
        for tree in exhaustive_trees(kind, args.n):
            print(_format_tree(tree))
        return EXIT_OK
    rng, seed = make_rng(args.seed if args.seed is not None else config.generation.seed)
    logger.info("generating %d %s trees with seed %d", args.count, kind, seed)
    for _ in range(args.count):
        print(_format_tree(random_tree(kind, args.n, rng)))
    return EXIT_OK


def _baseline_estimate(args: argparse.Namespace, config: DeplinConfig) -> list[str]:
    if not args.metric:
        raise UsageError("--what estimate needs --metric")
    mode = EstimationMode(args.mode)
    seed = args.seed if args.seed is not None else config.generation.seed
    workers = args.threads or config.analysis.resolved_threads()
    if args.tree:
        tree = _tree_arg(args.tree)
        result = estimate_over_arrangements(
            tree,
            args.metric,
            Constraint(args.constraint),
            mode,
            samples=args.samples,
            seed=seed,
            limits=config.limits,
            workers=workers,
        )
    else:
        result = estimate_over_trees(
            TreeKind.parse(args.kind),
            args.n,
            args.metric,
            mode,
            samples=args.samples,
            seed=seed,
            limits=config.limits,
            workers=workers,
        )
    lines = [
        f"mean\t{result.mean}",
        f"variance\t{result.variance}",
        f"third_central_moment\t{result.third_central_moment}",
        f"fourth_central_moment\t{result.fourth_central_moment}",
    ]
    if result.std_error is not None:
        lines.append(f"std_error\t{result.std_error}")
        lines.append(f"seed\t{result.seed}")
    lines.append(f"samples\t{result.samples}")
    return lines


def cmd_baseline(args: argparse.Namespace, config: DeplinConfig) -> int:
    if args.what == "estimate":
        if not args.tree and (not args.kind or args.n is None):
            raise UsageError("--what estimate needs --tree, or --kind and -n")
        lines = _baseline_estimate(args, config)
    else:
        if not args.tree:
            raise UsageError(f"--what {args.what} needs --tree")
        tree = _tree_arg(args.tree)
        max_n = config.limits.exhaustive_max_n
        if args.what == "ED_unconstrained":
            lines = [str(expected_D_unconstrained(tree))]
        elif args.what == "EC_unconstrained":
            lines = [str(expected_C_unconstrained(tree))]
        else:
            if args.what == "Dmin_unconstrained":
                result = min_D_unconstrained(tree, max_n=max_n)
            elif args.what == "Dmin_planar":
                result = min_D_planar(tree, max_n=max_n)
            else:
                result = min_D_projective(tree, max_n=max_n)
            lines = [str(result.value), str(result.arrangement)]
    for line in lines:
        print(line)
    return EXIT_OK


def _read_trees(path: Path) -> list[RootedTree]:
    if not path.is_file():
        raise InputNotFoundError(path)
    trees = []
    text = path.read_text(encoding="utf-8", errors=DECODE_ERRORS)
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            trees.append(from_head_vector(parse_line(line)))
        except ParseError as e:
            raise e.at_line(number) from e
    return trees


def cmd_isomorphic(args: argparse.Namespace, config: DeplinConfig) -> int:
    first, second = _read_trees(args.first), _read_trees(args.second)
    if len(first) != len(second):
        raise UsageError(f"{args.first} has {len(first)} trees but {args.second} has {len(second)}")
    mode = IsomorphismMode(args.mode)
    all_isomorphic = True
    for i, (a, b) in enumerate(zip(first, second), start=1):
        same = are_isomorphic(a, b, mode)
        all_isomorphic &= same
        print(f"{i}\t{'true' if same else 'false'}")
    return EXIT_OK if all_isomorphic else EXIT_NOT_ISOMORPHIC


def _add_processing_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--features",
        help="Comma-separated feature names, from the list below",
    )
    parser.add_argument(
        "--policy",
        choices=[p.value for p in ErrorPolicy],
        help="What to do with invalid sentences",
    )
    parser.add_argument("--threads", type=int, help="Worker processes (1 = sequential)")
    parser.add_argument("--exact", action="store_true", help="Write rationals as p/q")


def _features_epilog() -> str:
    lines = ["features:"]
    lines.extend(f"  {name:<22}{get_metric(name).description}" for name in metric_names())
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    # --version is accepted after any subcommand too
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--version", action="version", version=f"deplin {__version__}")

    parser = argparse.ArgumentParser(
        prog="deplin",
        description="deplin - Metrics and baselines for syntactic dependency trees",
        parents=[common],
    )
    parser.add_argument("--config", type=Path, help="Configuration file (TOML)")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="More logging (-v info, -vv debug)"
    )

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    epilog = _features_epilog()
    analyze = subparsers.add_parser(
        "analyze",
        help="Compute per-sentence features of a treebank",
        parents=[common],
        epilog=epilog,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    analyze.add_argument("input", type=Path, help="Head-vector treebank")
    analyze.add_argument("output", type=Path, help="CSV output file")
    _add_processing_flags(analyze)

    collection = subparsers.add_parser(
        "collection",
        help="Analyze a list of treebanks",
        parents=[common],
        epilog=epilog,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    collection.add_argument("list", type=Path, help="File listing one treebank per line")
    target = collection.add_mutually_exclusive_group(required=True)
    target.add_argument("--outdir", type=Path, help="Directory for one CSV per treebank")
    target.add_argument("--merge-out", type=Path, help="Single CSV with a treebank column")
    _add_processing_flags(collection)

    convert = subparsers.add_parser(
        "convert", help="Convert CoNLL-U to head vectors", parents=[common]
    )
    convert.add_argument("input", type=Path, help="CoNLL-U file")
    convert.add_argument("output", type=Path, help="Head-vector output file")
    convert.add_argument("--remove-punct", action="store_true", help="Drop PUNCT tokens")
    convert.add_argument(
        "--remove-function-words", action="store_true", help="Drop function-word tokens"
    )
    convert.add_argument("--min-len", type=int, help="Drop sentences shorter than this")
    convert.add_argument("--max-len", type=int, help="Drop sentences longer than this")
    convert.add_argument("--policy", choices=[p.value for p in ErrorPolicy])

    generate = subparsers.add_parser("generate", help="Generate trees", parents=[common])
    generate.add_argument("--kind", required=True, choices=[k.value for k in TreeKind])
    generate.add_argument("-n", type=int, required=True, help="Number of vertices")
    how = generate.add_mutually_exclusive_group(required=True)
    how.add_argument("--exhaustive", action="store_true", help="Every tree of the kind")
    how.add_argument("--count", type=int, help="Number of uniformly random trees")
    generate.add_argument("--seed", type=int, help="Random seed")

    baseline = subparsers.add_parser(
        "baseline", help="Minimum and expected baselines", parents=[common]
    )
    baseline.add_argument("--tree", help="Head vector, e.g. \"0 1 1\"")
    baseline.add_argument("--what", required=True, choices=BASELINES)
    baseline.add_argument("--metric", help="Metric to estimate")
    baseline.add_argument(
        "--constraint", default="unconstrained", choices=[c.value for c in Constraint]
    )
    baseline.add_argument("--mode", default="exact", choices=[m.value for m in EstimationMode])
    baseline.add_argument("--samples", type=int, default=10_000)
    baseline.add_argument("--seed", type=int)
    baseline.add_argument("--kind", choices=[k.value for k in TreeKind], help="Tree ensemble")
    baseline.add_argument("-n", type=int, help="Tree size for --kind")
    baseline.add_argument("--threads", type=int, help="Worker processes for Monte Carlo")

    isomorphic = subparsers.add_parser(
        "isomorphic", help="Compare trees line by line", parents=[common]
    )
    isomorphic.add_argument("first", type=Path)
    isomorphic.add_argument("second", type=Path)
    isomorphic.add_argument("--mode", default="free", choices=[m.value for m in IsomorphismMode])

    return parser


COMMANDS = {
    "analyze": cmd_analyze,
    "collection": cmd_collection,
    "convert": cmd_convert,
    "generate": cmd_generate,
    "baseline": cmd_baseline,
    "isomorphic": cmd_isomorphic,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _setup_logging(args.verbose)

    if args.command is None:
        parser.print_help()
        return EXIT_USAGE

    try:
        config = load_config(args.config)
        return COMMANDS[args.command](args, config)
    except UnicodeError as e:
        _error(e)
        return EXIT_IO
    except (UnknownMetricError, UsageError, ConfigurationError, KindMismatchError, ValueError) as e:
        _error(e)
        return EXIT_USAGE
    except (InputNotFoundError, WriteError, ParseError, OSError) as e:
        _error(e)
        return EXIT_IO
    except DeplinError as e:
        _error(e)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
