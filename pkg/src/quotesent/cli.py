"""Command-line interface.

Thin wrappers over the library: parsing, dispatch and formatting only. Data
goes to stdout, diagnostics to stderr. Exit codes: 0 success, 1 internal
error, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import evaluation
from .categoryfilter import CategoryDefs, load_categories
from .corpus import compute_agreement, agreed_subset, load_annotations, load_corpus
from .errors import InputFormatError, QuoteSentError
from .lexicon import Lexicon, convert_graded, load_graded, load_lexicon, merge, save_lexicon
from .scorer import ScoreConfig, breakdown_to_dict, classify, score_corpus
from .textproc import WindowSpec


def _load_lexicons(paths: list[str]) -> list[Lexicon]:
    return [load_lexicon(p) for p in paths]


def _combined_lexicon(paths: list[str], strategy: str) -> Lexicon:
    lexicons = _load_lexicons(paths)
    return lexicons[0] if len(lexicons) == 1 else merge(lexicons, strategy)


def _load_defs(path: str | None) -> CategoryDefs:
    return load_categories(path) if path else CategoryDefs.empty()


def _score_config(args) -> ScoreConfig:
    return ScoreConfig(
        window=WindowSpec.parse(args.window),
        alerts_filter=args.alerts == "on",
        filter_mode=args.filter_mode,
        neutral_threshold=args.tau,
    )


def cmd_classify(args) -> int:
    config = _score_config(args)  # window and tau validated before any file work
    quotes = load_corpus(args.corpus)
    lexicon = _combined_lexicon(args.lexicon, args.merge)
    breakdowns = score_corpus(
        quotes, lexicon, _load_defs(args.categories), config, n_jobs=args.jobs
    )
    for quote, breakdown in zip(quotes, breakdowns):
        label = classify(breakdown, args.tau).value
        if args.explain:
            record = breakdown_to_dict(breakdown)
            record["label"] = label
        else:
            record = {"id": quote.id, "label": label}
        print(json.dumps(record))
    return 0


def cmd_evaluate(args) -> int:
    config = _score_config(args)
    quotes = load_corpus(args.corpus)
    lexicon = _combined_lexicon(args.lexicon, args.merge)
    result = evaluation.evaluate(
        quotes, lexicon, _load_defs(args.categories), config, n_jobs=args.jobs
    )
    print(evaluation.render_result(result, args.format, args.full_precision), end="")
    return 0


def cmd_grid(args) -> int:
    windows = [WindowSpec.parse(w) for w in args.windows.split(",") if w.strip()]
    quotes = load_corpus(args.corpus)
    lexicons = _load_lexicons(args.lexicon)
    grid = evaluation.run_grid(
        quotes,
        lexicons,
        _load_defs(args.categories),
        windows=windows,
        filter_mode=args.filter_mode,
        neutral_threshold=args.tau,
        n_jobs=args.jobs,
    )
    print(evaluation.render_grid(grid, args.format, args.full_precision), end="")
    return 0


def cmd_agreement(args) -> int:
    quotes = load_corpus(args.corpus)
    annotations = load_annotations(args.annotations)
    report = compute_agreement(quotes, annotations, args.denominator_mode)
    lines = [
        f"pairs: {len(report.per_pair)}",
        f"quotes annotated: {report.total_quotes}",
        f"agreed: {report.agreed_quotes}",
        f"overall agreement: {report.overall_agreement * 100:.1f}% "
        f"({report.agreed_quotes}/{report.total_quotes})",
        f"macro agreement over pairs: {report.macro_agreement * 100:.1f}%",
    ]
    per_class_counts = ", ".join(
        f"{label.value} {report.agreed_per_class[label]}"
        for label in sorted(report.agreed_per_class, key=lambda l: l.value)
    )
    lines.append(f"agreed per class: {per_class_counts}")
    per_class_ratios = ", ".join(
        f"{label.value} "
        + ("n/a" if ratio is None else f"{ratio * 100:.1f}%")
        for label, ratio in sorted(report.per_class_agreement.items(), key=lambda kv: kv[0].value)
    )
    lines.append(f"per-class agreement ({report.denominator_mode} denominators): {per_class_ratios}")
    subset = agreed_subset(quotes, annotations)
    if subset:
        label, fraction = evaluation.majority_baseline(subset)
        count = sum(1 for q in subset if q.gold_label is label)
        lines.append(
            f"agreed-subset majority baseline: {label.value} {fraction:.4f} ({count}/{len(subset)})"
        )
    print("\n".join(lines))
    return 0


def cmd_lexicon_convert(args) -> int:
    entries = load_graded(args.graded)
    lexicon, dropped = convert_graded(entries, args.high_threshold, name=args.name)
    if dropped:
        print(
            f"dropped {len(dropped)} tied entries: "
            + ", ".join(" ".join(e.surface) for e in dropped),
            file=sys.stderr,
        )
    _write_lexicon(lexicon, args.output)
    return 0


def cmd_lexicon_merge(args) -> int:
    merged = merge(_load_lexicons(args.lexicons), args.strategy)
    print(f"merged: {merged.name} ({len(merged)} entries)", file=sys.stderr)
    _write_lexicon(merged, args.output)
    return 0


def cmd_lexicon_inspect(args) -> int:
    lexicon = load_lexicon(args.path)
    by_class: dict[str, int] = {}
    multiword = 0
    for entry in lexicon:
        by_class[entry.polarity.value] = by_class.get(entry.polarity.value, 0) + 1
        if len(entry.surface) > 1:
            multiword += 1
    print(f"name: {lexicon.name}")
    print(f"entries: {len(lexicon)}")
    print(f"multiword entries: {multiword}")
    for name in ("HIGH_POSITIVE", "POSITIVE", "NEGATIVE", "HIGH_NEGATIVE"):
        print(f"{name}: {by_class.get(name, 0)}")
    return 0


def _write_lexicon(lexicon: Lexicon, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as f:
            save_lexicon(lexicon, f)
    else:
        save_lexicon(lexicon, sys.stdout)


def _add_scoring_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--window", default="whole", metavar="whole|N",
                        help="word window around mentions (default: whole)")
    parser.add_argument("--alerts", choices=["on", "off"], default="on",
                        help="discard category (alert) words (default: on)")
    parser.add_argument("--filter-mode", choices=["tagged", "global"], default="tagged",
                        help="which category definitions apply (default: tagged)")
    parser.add_argument("--tau", type=int, default=0, metavar="N",
                        help="neutral threshold on |total| (default: 0)")
    parser.add_argument("--jobs", type=int, default=None, metavar="N",
                        help="parallel scoring workers; output is identical for any value")


def _add_lexicon_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--lexicon", action="append", required=True, metavar="PATH",
                        help="four-class lexicon file (repeatable)")
    parser.add_argument("--categories", default=None, metavar="PATH",
                        help="category definitions file")
    parser.add_argument("--merge", choices=["priority-first", "additive"],
                        default="priority-first",
                        help="strategy when several lexicons are given (default: priority-first)")


def _add_format_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=["table", "csv"], default="table")
    parser.add_argument("--full-precision", action="store_true",
                        help="print accuracies at full precision (csv mode)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quotesent",
        description="Target-centric, lexicon-based sentiment classification for news quotations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="label each quote in a corpus")
    p.add_argument("corpus", help="JSON Lines corpus file")
    _add_lexicon_flags(p)
    _add_scoring_flags(p)
    p.add_argument("--explain", action="store_true",
                   help="emit the full per-quote scoring breakdown")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("evaluate", help="accuracy against gold labels")
    p.add_argument("corpus")
    _add_lexicon_flags(p)
    _add_scoring_flags(p)
    _add_format_flags(p)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("grid", help="window x alerts x lexicon accuracy grid")
    p.add_argument("corpus")
    p.add_argument("--lexicon", action="append", required=True, metavar="PATH",
                   help="lexicon column (repeatable)")
    p.add_argument("--categories", default=None, metavar="PATH")
    p.add_argument("--windows", default="whole,3,6,10", metavar="LIST",
                   help="comma-separated window sizes (default: whole,3,6,10)")
    p.add_argument("--filter-mode", choices=["tagged", "global"], default="tagged")
    p.add_argument("--tau", type=int, default=0, metavar="N")
    p.add_argument("--jobs", type=int, default=None, metavar="N")
    _add_format_flags(p)
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("agreement", help="annotation agreement statistics")
    p.add_argument("corpus")
    p.add_argument("annotations", help="JSON Lines annotation file")
    p.add_argument("--denominator-mode", choices=["first-annotator", "either-annotator"],
                   default="first-annotator")
    p.set_defaults(func=cmd_agreement)

    p = sub.add_parser("lexicon", help="lexicon utilities")
    lex_sub = p.add_subparsers(dest="lexicon_command", required=True)

    q = lex_sub.add_parser("convert", help="graded resource to four-class lexicon")
    q.add_argument("graded", help="file with surface<TAB>positivity<TAB>negativity rows")
    q.add_argument("--high-threshold", type=float, default=0.5, metavar="T",
                   help="dominant value at or above T maps to a HIGH class (default: 0.5)")
    q.add_argument("--name", default="converted")
    q.add_argument("-o", "--output", default=None)
    q.set_defaults(func=cmd_lexicon_convert)

    q = lex_sub.add_parser("merge", help="combine lexicon files")
    q.add_argument("lexicons", nargs="+", help="lexicon files, highest priority first")
    q.add_argument("--strategy", choices=["priority-first", "additive"],
                   default="priority-first")
    q.add_argument("-o", "--output", default=None)
    q.set_defaults(func=cmd_lexicon_merge)

    q = lex_sub.add_parser("inspect", help="summarize a lexicon file")
    q.add_argument("path")
    q.set_defaults(func=cmd_lexicon_inspect)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputFormatError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QuoteSentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
