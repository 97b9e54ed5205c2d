"""Accuracy evaluation against gold labels and the window/alerts/lexicon grid."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .categoryfilter import CategoryDefs
from .corpus import Label, Quote
from .lexicon import Lexicon
from .scorer import Classification, ScoreConfig, classify, score_corpus
from .textproc import WindowSpec

DEFAULT_WINDOWS = (
    WindowSpec.whole_text(),
    WindowSpec.words(3),
    WindowSpec.words(6),
    WindowSpec.words(10),
)
DEFAULT_ALERT_MODES = (True, False)

# fixed tie-break order for the majority baseline
_MAJORITY_ORDER = (Label.OBJECTIVE, Label.NEGATIVE, Label.POSITIVE)


@dataclass
class EvalResult:
    lexicon_name: str
    config: ScoreConfig
    total_quotes: int
    covered_quotes: int
    correct: int
    accuracy: float
    confusion: dict[tuple[Label, Label], int]  # (gold, predicted) -> count
    precision: dict[Label, float | None]
    recall: dict[Label, float | None]

    @property
    def coverage(self) -> float:
        return self.covered_quotes / self.total_quotes if self.total_quotes else 0.0

    @property
    def accuracy_total(self) -> float:
        """Accuracy over all quotes, counting unfound targets as wrong."""
        return self.correct / self.total_quotes if self.total_quotes else 0.0


def evaluate(
    quotes: Sequence[Quote],
    lexicon: Lexicon,
    defs: CategoryDefs | None = None,
    config: ScoreConfig = ScoreConfig(),
    n_jobs: int | None = None,
) -> EvalResult:
    """Covered-set accuracy: quotes whose target is never found are excluded
    from the denominator and surface only through the coverage ratio.
    """
    for quote in quotes:
        if quote.gold_label is None:
            raise ValueError(f"quote {quote.id!r} has no gold label")
    breakdowns = score_corpus(list(quotes), lexicon, defs, config, n_jobs=n_jobs)
    confusion: dict[tuple[Label, Label], int] = {
        (g, p): 0 for g in Label for p in Label
    }
    covered = 0
    correct = 0
    for quote, breakdown in zip(quotes, breakdowns):
        predicted = classify(breakdown, config.neutral_threshold)
        if predicted is Classification.TARGET_NOT_FOUND:
            continue
        covered += 1
        predicted_label = Label(predicted.value)
        confusion[(quote.gold_label, predicted_label)] += 1
        if predicted_label is quote.gold_label:
            correct += 1
    precision: dict[Label, float | None] = {}
    recall: dict[Label, float | None] = {}
    for label in Label:
        predicted_n = sum(confusion[(g, label)] for g in Label)
        gold_n = sum(confusion[(label, p)] for p in Label)
        precision[label] = confusion[(label, label)] / predicted_n if predicted_n else None
        recall[label] = confusion[(label, label)] / gold_n if gold_n else None
    return EvalResult(
        lexicon_name=lexicon.name,
        config=config,
        total_quotes=len(quotes),
        covered_quotes=covered,
        correct=correct,
        accuracy=correct / covered if covered else 0.0,
        confusion=confusion,
        precision=precision,
        recall=recall,
    )


def majority_baseline(quotes: Sequence[Quote]) -> tuple[Label, float]:
    """Most frequent gold class and its corpus fraction.

    Ties break objective over negative over positive. The value is always
    derived from the data at hand; externally quoted baseline figures for
    similar corpora may use other denominators (see README).
    """
    if not quotes:
        raise ValueError("majority baseline of an empty corpus is undefined")
    counts = {label: 0 for label in Label}
    for quote in quotes:
        if quote.gold_label is None:
            raise ValueError(f"quote {quote.id!r} has no gold label")
        counts[quote.gold_label] += 1
    winner = max(_MAJORITY_ORDER, key=lambda lbl: (counts[lbl], -_MAJORITY_ORDER.index(lbl)))
    return winner, counts[winner] / len(quotes)


@dataclass
class EvalGrid:
    windows: tuple[WindowSpec, ...]
    alert_modes: tuple[bool, ...]
    lexicon_names: tuple[str, ...]
    cells: dict[tuple[WindowSpec, bool, str], EvalResult]

    def result(self, window: WindowSpec, alerts: bool, lexicon_name: str) -> EvalResult | None:
        return self.cells.get((window, alerts, lexicon_name))


def run_grid(
    quotes: Sequence[Quote],
    lexicons: Sequence[Lexicon],
    defs: CategoryDefs | None = None,
    windows: Sequence[WindowSpec] = DEFAULT_WINDOWS,
    alert_modes: Sequence[bool] = DEFAULT_ALERT_MODES,
    filter_mode: str = "tagged",
    neutral_threshold: int = 0,
    n_jobs: int | None = None,
) -> EvalGrid:
    """Evaluate every window x alerts x lexicon combination.

    Cells are independent, so evaluation order never affects any value.
    """
    if not quotes or not lexicons or not windows or not alert_modes:
        raise ValueError("run_grid needs non-empty quotes, lexicons, windows and alert modes")
    names = [lx.name for lx in lexicons]
    if len(set(names)) != len(names):
        raise ValueError(f"lexicon names must be unique, got {names}")
    cells = {}
    for window in windows:
        for alerts in alert_modes:
            config = ScoreConfig(
                window=window,
                alerts_filter=alerts,
                filter_mode=filter_mode,
                neutral_threshold=neutral_threshold,
            )
            for lx in lexicons:
                cells[(window, alerts, lx.name)] = evaluate(
                    quotes, lx, defs, config, n_jobs=n_jobs
                )
    return EvalGrid(
        windows=tuple(windows),
        alert_modes=tuple(alert_modes),
        lexicon_names=tuple(names),
        cells=cells,
    )


def _row_order(grid: EvalGrid) -> list[tuple[WindowSpec, bool]]:
    # whole text first, then ascending window size; alerts on before off
    windows = sorted(grid.windows, key=lambda w: (not w.is_whole_text, w.size or 0))
    alert_modes = sorted(grid.alert_modes, reverse=True)
    return [(w, a) for w in windows for a in alert_modes]


def _format_accuracy(value: float | None, full_precision: bool) -> str:
    if value is None:
        return ""
    return str(value) if full_precision else f"{value:.2f}"


def render_grid(grid: EvalGrid, fmt: str = "table", full_precision: bool = False) -> str:
    """Stable textual report; identical inputs yield identical bytes."""
    header = ["window", "alerts", *grid.lexicon_names]
    rows = []
    for window, alerts in _row_order(grid):
        row = [window.label, "on" if alerts else "off"]
        for name in grid.lexicon_names:
            result = grid.result(window, alerts, name)
            row.append(_format_accuracy(result.accuracy if result else None, full_precision))
        rows.append(row)
    if fmt == "csv":
        return "\n".join(",".join(row) for row in [header, *rows]) + "\n"
    if fmt == "table":
        widths = [max(len(r[i]) for r in [header, *rows]) for i in range(len(header))]
        lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
                 for row in [header, *rows]]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report format {fmt!r}")


def render_result(result: EvalResult, fmt: str = "table", full_precision: bool = False) -> str:
    """Single-configuration report with confusion and per-class P/R."""
    acc = _format_accuracy(result.accuracy, full_precision)
    if fmt == "csv":
        header = "window,alerts,lexicon,total,covered,correct,accuracy"
        row = ",".join(
            [
                result.config.window.label,
                "on" if result.config.alerts_filter else "off",
                result.lexicon_name,
                str(result.total_quotes),
                str(result.covered_quotes),
                str(result.correct),
                acc,
            ]
        )
        return header + "\n" + row + "\n"
    if fmt != "table":
        raise ValueError(f"unknown report format {fmt!r}")
    lines = [
        f"lexicon: {result.lexicon_name}",
        f"window: {result.config.window.label}   alerts: "
        f"{'on' if result.config.alerts_filter else 'off'}   "
        f"filter mode: {result.config.filter_mode}   "
        f"threshold: {result.config.neutral_threshold}",
        f"quotes: {result.total_quotes}   covered: {result.covered_quotes} "
        f"({result.coverage:.2f})   correct: {result.correct}   accuracy: {acc}"
        f"   accuracy over all quotes: {_format_accuracy(result.accuracy_total, full_precision)}",
        "",
        "confusion (gold rows, predicted columns):",
    ]
    labels = list(Label)
    name_w = max(len(lbl.value) for lbl in labels)
    lines.append(" " * (name_w + 2) + "  ".join(lbl.value.rjust(name_w) for lbl in labels))
    for gold in labels:
        cells = "  ".join(
            str(result.confusion[(gold, pred)]).rjust(name_w) for pred in labels
        )
        lines.append(gold.value.ljust(name_w + 2) + cells)
    lines.append("")
    for label in labels:
        p = result.precision[label]
        r = result.recall[label]
        lines.append(
            f"{label.value.ljust(name_w)}  precision: "
            f"{'n/a' if p is None else f'{p:.2f}'}  recall: "
            f"{'n/a' if r is None else f'{r:.2f}'}"
        )
    return "\n".join(lines) + "\n"


def render_report(report, fmt: str = "table", full_precision: bool = False) -> str:
    if isinstance(report, EvalGrid):
        return render_grid(report, fmt, full_precision)
    if isinstance(report, EvalResult):
        return render_result(report, fmt, full_precision)
    raise TypeError(f"cannot render {type(report).__name__}")
