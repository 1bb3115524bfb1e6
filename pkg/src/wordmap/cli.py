"""Command-line interface.

Subcommands: compare, single, analogy, nearest, validate-map.  Data goes
to stdout or the requested output file; progress and summaries go to
stderr.  Map files are written atomically (temp file + rename) so a
half-written file never replaces a good one.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from pathlib import Path

from . import __version__
from .embeddings import EmbeddingModel, load_model
from .errors import WordmapError
from .mapfile import parse_map, serialize_map
from .pipeline import PipelineReport, build_compare_map, build_single_map
from .tokenization import Stoplist, default_stoplist, load_stoplist
from .tsne import TsneConfig, TsneResult


def _add_model_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--model", required=True, help="word-vector model file")
    parser.add_argument(
        "--model-format",
        choices=("binary", "text"),
        default="binary",
        help="model file format (default: binary)",
    )


def _add_pipeline_args(parser: argparse.ArgumentParser) -> None:
    _add_model_arg(parser)
    parser.add_argument("--output", "-o", required=True, help="map file to write")
    parser.add_argument("--stoplist", help="newline-delimited stoplist file (default: bundled)")
    parser.add_argument(
        "--keep-non-alpha",
        action="store_true",
        help="keep tokens without any alphabetic character",
    )
    parser.add_argument("--perplexity", type=float, default=TsneConfig.perplexity)
    parser.add_argument("--learning-rate", type=float, default=TsneConfig.learning_rate)
    parser.add_argument("--n-iter", type=int, default=TsneConfig.n_iter)
    parser.add_argument(
        "--early-exaggeration", type=float, default=TsneConfig.early_exaggeration_factor
    )
    parser.add_argument(
        "--early-exaggeration-iters", type=int, default=TsneConfig.early_exaggeration_iters
    )
    parser.add_argument("--momentum-initial", type=float, default=TsneConfig.momentum_initial)
    parser.add_argument("--momentum-final", type=float, default=TsneConfig.momentum_final)
    parser.add_argument(
        "--momentum-switch-iter", type=int, default=TsneConfig.momentum_switch_iter
    )
    parser.add_argument("--seed", type=int, default=0, help="layout RNG seed (default: 0)")
    parser.add_argument("--kl-history", help="write the per-iteration KL trace as CSV")
    parser.add_argument(
        "--generated-at",
        help="timestamp recorded in the map (default: current UTC time); "
        "fix it for reproducible output files",
    )
    parser.add_argument(
        "--quiet",
        "-q",
        action="store_true",
        help="suppress the summary on stderr (errors still print)",
    )


def _tsne_config(args: argparse.Namespace) -> TsneConfig:
    return TsneConfig(
        perplexity=args.perplexity,
        learning_rate=args.learning_rate,
        n_iter=args.n_iter,
        early_exaggeration_factor=args.early_exaggeration,
        early_exaggeration_iters=args.early_exaggeration_iters,
        momentum_initial=args.momentum_initial,
        momentum_final=args.momentum_final,
        momentum_switch_iter=args.momentum_switch_iter,
        seed=args.seed,
    )


def _read_text(path: str, stage: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _StageFailure(stage, f"cannot read {path}: {exc.strerror or exc}") from exc
    except UnicodeDecodeError as exc:
        raise _StageFailure(stage, f"{path} is not valid UTF-8 text: {exc.reason}") from exc


def _load_model(args: argparse.Namespace) -> EmbeddingModel:
    try:
        return load_model(args.model, text=args.model_format == "text")
    except OSError as exc:
        raise _StageFailure("model", f"cannot read {args.model}: {exc.strerror or exc}") from exc
    except WordmapError as exc:
        raise _StageFailure("model", f"{args.model}: {exc}") from exc


def _load_stoplist(args: argparse.Namespace) -> Stoplist:
    if not args.stoplist:
        return default_stoplist()
    try:
        return load_stoplist(Path(args.stoplist).read_bytes())
    except OSError as exc:
        raise _StageFailure(
            "stoplist", f"cannot read {args.stoplist}: {exc.strerror or exc}"
        ) from exc
    except WordmapError as exc:
        raise _StageFailure("stoplist", f"{args.stoplist}: {exc}") from exc


class _StageFailure(Exception):
    """A pipeline stage failed; carries the stage name for the exit message."""

    def __init__(self, stage: str, message: str):
        super().__init__(message)
        self.stage = stage


def _write_atomic(path: str, data: bytes) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".wordmap-", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(data)
        os.replace(tmp_path, path)
    except BaseException:
        try:
            os.unlink(tmp_path)
        except OSError:
            pass
        raise


def _write_kl_history(path: str, result: TsneResult | None) -> None:
    lines = ["iteration,kl"]
    if result is not None:
        lines.extend(f"{i},{float(kl)!r}" for i, kl in enumerate(result.kl_history))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def _print_report(report: PipelineReport, compare: bool, err) -> None:
    print(f"source A: {report.tokens_a} tokens, {report.vocab_a} words kept", file=err)
    if compare:
        print(f"source B: {report.tokens_b} tokens, {report.vocab_b} words kept", file=err)
        print(
            f"sets: {report.only_a} only A, {report.only_b} only B, {report.both} shared",
            file=err,
        )
    print(f"dropped (not in model): {report.dropped}", file=err)
    kl = "n/a" if report.final_kl is None else f"{report.final_kl:.6f}"
    print(f"map: {report.points} points, final KL {kl}", file=err)


def _cmd_compare(args: argparse.Namespace) -> int:
    err = sys.stderr
    model = _load_model(args)
    stoplist = _load_stoplist(args)
    text_a = _read_text(args.source_a, "source-a")
    text_b = _read_text(args.source_b, "source-b")
    try:
        word_map, report, result = build_compare_map(
            text_a,
            text_b,
            model,
            stoplist,
            config=_tsne_config(args),
            source_a_name=args.source_a_name or os.path.basename(args.source_a),
            source_b_name=args.source_b_name or os.path.basename(args.source_b),
            generated_at=args.generated_at,
            drop_non_alpha=not args.keep_non_alpha,
        )
    except WordmapError as exc:
        raise _StageFailure("map", str(exc)) from exc
    _finish_map(args, word_map, result)
    if not args.quiet:
        _print_report(report, compare=True, err=err)
        if report.points == 0:
            print("warning: no words to map (all filtered or missing from model)", file=err)
        print(f"wrote {args.output}", file=err)
    return 0


def _cmd_single(args: argparse.Namespace) -> int:
    err = sys.stderr
    model = _load_model(args)
    stoplist = _load_stoplist(args)
    text = _read_text(args.source, "source")
    try:
        word_map, report, result = build_single_map(
            text,
            model,
            stoplist,
            config=_tsne_config(args),
            source_name=args.source_name or os.path.basename(args.source),
            generated_at=args.generated_at,
            drop_non_alpha=not args.keep_non_alpha,
        )
    except WordmapError as exc:
        raise _StageFailure("map", str(exc)) from exc
    _finish_map(args, word_map, result)
    if not args.quiet:
        _print_report(report, compare=False, err=err)
        if report.points == 0:
            print("warning: no words to map (all filtered or missing from model)", file=err)
        print(f"wrote {args.output}", file=err)
    return 0


def _finish_map(args: argparse.Namespace, word_map, result: TsneResult | None) -> None:
    try:
        _write_atomic(args.output, serialize_map(word_map))
    except OSError as exc:
        raise _StageFailure("output", f"cannot write {args.output}: {exc.strerror or exc}") from exc
    if args.kl_history:
        try:
            _write_kl_history(args.kl_history, result)
        except OSError as exc:
            raise _StageFailure(
                "kl-history", f"cannot write {args.kl_history}: {exc.strerror or exc}"
            ) from exc


def _print_hits(hits) -> None:
    for hit in hits:
        print(f"{hit.word}\t{hit.score:.6f}")


def _cmd_analogy(args: argparse.Namespace) -> int:
    model = _load_model(args)
    try:
        hits = model.analogy(args.positive, args.negative or [], args.k)
    except (WordmapError, ValueError) as exc:
        raise _StageFailure("analogy", str(exc)) from exc
    _print_hits(hits)
    return 0


def _cmd_nearest(args: argparse.Namespace) -> int:
    model = _load_model(args)
    try:
        hits = model.nearest(args.word, args.k)
    except (WordmapError, ValueError) as exc:
        raise _StageFailure("nearest", str(exc)) from exc
    _print_hits(hits)
    return 0


def _cmd_validate_map(args: argparse.Namespace) -> int:
    try:
        data = Path(args.map).read_bytes()
    except OSError as exc:
        raise _StageFailure("validate-map", f"cannot read {args.map}: {exc.strerror or exc}") from exc
    try:
        word_map = parse_map(data)
    except WordmapError as exc:
        raise _StageFailure("validate-map", f"{args.map}: {exc}") from exc
    sizes = word_map.set_sizes()
    print(
        f"valid map: {len(word_map.points)} points "
        f"(a={sizes['a']}, b={sizes['b']}, both={sizes['both']})"
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wordmap",
        description="Compare text sources as an explorable 2D word map.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    compare = sub.add_parser("compare", help="map the vocabulary of two sources")
    compare.add_argument("source_a", help="first text file (UTF-8)")
    compare.add_argument("source_b", help="second text file (UTF-8)")
    compare.add_argument("--source-a-name", help="display name for source A (default: file name)")
    compare.add_argument("--source-b-name", help="display name for source B (default: file name)")
    _add_pipeline_args(compare)
    compare.set_defaults(func=_cmd_compare)

    single = sub.add_parser("single", help="map the vocabulary of one source")
    single.add_argument("source", help="text file (UTF-8)")
    single.add_argument("--source-name", help="display name for the source (default: file name)")
    _add_pipeline_args(single)
    single.set_defaults(func=_cmd_single)

    analogy = sub.add_parser("analogy", help="word arithmetic: positive minus negative terms")
    _add_model_arg(analogy)
    analogy.add_argument("--positive", nargs="+", required=True, help="words added to the query")
    analogy.add_argument("--negative", nargs="*", default=[], help="words subtracted from the query")
    analogy.add_argument("-k", type=int, default=5, help="number of results (default: 5)")
    analogy.set_defaults(func=_cmd_analogy)

    nearest = sub.add_parser("nearest", help="words most similar to a query word")
    _add_model_arg(nearest)
    nearest.add_argument("--word", required=True, help="query word")
    nearest.add_argument("-k", type=int, default=5, help="number of results (default: 5)")
    nearest.set_defaults(func=_cmd_nearest)

    validate = sub.add_parser("validate-map", help="check a map file against the schema")
    validate.add_argument("map", help="map JSON file")
    validate.set_defaults(func=_cmd_validate_map)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _StageFailure as exc:
        print(f"error: {exc.stage}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
