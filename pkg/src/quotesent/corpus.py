"""Annotated quote corpora, target aliases and annotation-agreement statistics."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, replace
from pathlib import Path
from typing import IO, Iterable, Sequence

from .errors import InputFormatError
from .textproc import tokenize

DENOMINATOR_MODES = ("first-annotator", "either-annotator")


class Label(enum.Enum):
    """Gold annotation labels. OBJECTIVE marks quotes with no expressed sentiment."""

    POSITIVE = "positive"
    NEGATIVE = "negative"
    OBJECTIVE = "objective"


@dataclass(frozen=True)
class TargetSpec:
    """The entity a quote's sentiment is directed at, with its surface aliases."""

    canonical_name: str
    aliases: frozenset[tuple[str, ...]]

    def __post_init__(self):
        if not self.canonical_name:
            raise ValueError("target canonical_name must be non-empty")
        if not self.aliases:
            raise ValueError(f"target {self.canonical_name!r} has no aliases")

    @classmethod
    def from_name(cls, name: str) -> "TargetSpec":
        return cls(name, frozenset(derive_aliases(name)))

    @classmethod
    def with_aliases(cls, name: str, aliases: Iterable[str]) -> "TargetSpec":
        """Explicit aliases (name parts, titles) replace derivation entirely."""
        return cls(name, frozenset(tuple(a.lower().split()) for a in aliases))


@dataclass(frozen=True)
class Quote:
    id: str
    text: str
    source: str
    target: TargetSpec
    categories: frozenset[str] = frozenset()
    gold_label: Label | None = None

    def __post_init__(self):
        if not self.id:
            raise ValueError("quote id must be non-empty")
        if not self.text:
            raise ValueError(f"quote {self.id!r} has empty text")


def derive_aliases(canonical_name: str) -> set[tuple[str, ...]]:
    """Mention forms derivable from a name: the full token sequence plus its
    first and last tokens, lowercased. Tokens shorter than two characters
    (initials) never stand alone.
    """
    forms = [t.form for t in tokenize(canonical_name)]
    if not forms:
        raise ValueError(f"cannot derive aliases from {canonical_name!r}")
    aliases = {tuple(forms)}
    for part in (forms[0], forms[-1]):
        if len(part) >= 2:
            aliases.add((part,))
    return aliases


def _parse_record(record: dict, path: str, line_no: int) -> Quote:
    try:
        target_obj = record["target"]
        if "aliases" in target_obj:
            target = TargetSpec.with_aliases(target_obj["name"], target_obj["aliases"])
        else:
            target = TargetSpec.from_name(target_obj["name"])
        gold = record.get("gold")
        return Quote(
            id=record["id"],
            text=record["text"],
            source=record["source"],
            target=target,
            categories=frozenset(record.get("categories", [])),
            gold_label=Label(gold) if gold is not None else None,
        )
    except KeyError as exc:
        raise InputFormatError(path, line_no, f"missing field {exc.args[0]!r}")
    except (TypeError, ValueError) as exc:
        raise InputFormatError(path, line_no, str(exc))


def load_corpus(path: str | Path) -> list[Quote]:
    """Read a JSON Lines corpus, in file order.

    Records without an explicit `aliases` array get derived aliases from the
    target name. Duplicate ids and malformed records raise InputFormatError
    naming the line.
    """
    path = Path(path)
    if not path.exists():
        raise InputFormatError(str(path), None, "corpus file not found")
    quotes: list[Quote] = []
    seen_ids: set[str] = set()
    with open(path, encoding="utf-8") as f:
        for line_no, raw in enumerate(f, start=1):
            if not raw.strip():
                continue
            try:
                record = json.loads(raw)
            except json.JSONDecodeError as exc:
                raise InputFormatError(str(path), line_no, f"invalid JSON: {exc.msg}")
            if not isinstance(record, dict):
                raise InputFormatError(str(path), line_no, "record must be a JSON object")
            quote = _parse_record(record, str(path), line_no)
            if quote.id in seen_ids:
                raise InputFormatError(str(path), line_no, f"duplicate quote id {quote.id!r}")
            seen_ids.add(quote.id)
            quotes.append(quote)
    return quotes


def quote_to_record(quote: Quote) -> dict:
    """Wire-format dict for one quote; inverse of the loader (aliases explicit)."""
    record = {
        "id": quote.id,
        "text": quote.text,
        "source": quote.source,
        "target": {
            "name": quote.target.canonical_name,
            "aliases": sorted(" ".join(a) for a in quote.target.aliases),
        },
        "categories": sorted(quote.categories),
    }
    if quote.gold_label is not None:
        record["gold"] = quote.gold_label.value
    return record


def dump_corpus(quotes: Iterable[Quote], out: IO[str]) -> None:
    for quote in quotes:
        out.write(json.dumps(quote_to_record(quote)) + "\n")


@dataclass(frozen=True)
class AnnotationSet:
    """Per-pair annotations: pair id -> quote id -> (label_A, label_B)."""

    pairs: dict[str, dict[str, tuple[Label, Label]]]

    def quote_ids(self) -> set[str]:
        return {qid for labels in self.pairs.values() for qid in labels}

    def __len__(self) -> int:
        return sum(len(labels) for labels in self.pairs.values())


def load_annotations(path: str | Path) -> AnnotationSet:
    """Read JSON Lines annotation records: `pair`, `quote_id`, `a`, `b`."""
    path = Path(path)
    if not path.exists():
        raise InputFormatError(str(path), None, "annotation file not found")
    pairs: dict[str, dict[str, tuple[Label, Label]]] = {}
    claimed: dict[str, str] = {}  # quote id -> pair that annotated it
    with open(path, encoding="utf-8") as f:
        for line_no, raw in enumerate(f, start=1):
            if not raw.strip():
                continue
            try:
                record = json.loads(raw)
                pair_id = record["pair"]
                quote_id = record["quote_id"]
                labels = (Label(record["a"]), Label(record["b"]))
            except json.JSONDecodeError as exc:
                raise InputFormatError(str(path), line_no, f"invalid JSON: {exc.msg}")
            except KeyError as exc:
                raise InputFormatError(str(path), line_no, f"missing field {exc.args[0]!r}")
            except ValueError as exc:
                raise InputFormatError(str(path), line_no, str(exc))
            if quote_id in claimed:
                raise InputFormatError(
                    str(path), line_no,
                    f"quote {quote_id!r} annotated twice (pairs {claimed[quote_id]!r} and {pair_id!r})",
                )
            claimed[quote_id] = pair_id
            pairs.setdefault(pair_id, {})[quote_id] = labels
    return AnnotationSet(pairs)


@dataclass(frozen=True)
class PairStats:
    pair_id: str
    total: int
    agreed: int

    @property
    def agreement(self) -> float:
        return self.agreed / self.total if self.total else 0.0


@dataclass(frozen=True)
class AgreementReport:
    total_quotes: int
    agreed_quotes: int
    agreed_per_class: dict[Label, int]
    overall_agreement: float
    per_class_agreement: dict[Label, float | None]
    per_pair: tuple[PairStats, ...]
    denominator_mode: str

    @property
    def macro_agreement(self) -> float:
        """Unweighted mean of the per-pair agreement ratios."""
        if not self.per_pair:
            return 0.0
        return sum(p.agreement for p in self.per_pair) / len(self.per_pair)


def _check_annotations(corpus: Sequence[Quote], annotations: AnnotationSet) -> None:
    known = {q.id for q in corpus}
    unknown = annotations.quote_ids() - known
    if unknown:
        sample = sorted(unknown)[0]
        raise ValueError(f"annotation references unknown quote id {sample!r}")


def compute_agreement(
    corpus: Sequence[Quote],
    annotations: AnnotationSet,
    denominator_mode: str = "first-annotator",
) -> AgreementReport:
    """Raw percentage agreement, pooled over pairs.

    A quote counts as agreed when both annotators in its pair chose the same
    label. Per-class ratios divide agreed-as-C counts by the number of quotes
    where annotator A chose C (first-annotator mode) or where either
    annotator chose C (either-annotator mode). Micro-averaged overall ratio;
    per-pair ratios and their macro average ride along in the report.
    """
    if denominator_mode not in DENOMINATOR_MODES:
        raise ValueError(
            f"unknown denominator mode {denominator_mode!r}, expected one of {DENOMINATOR_MODES}"
        )
    _check_annotations(corpus, annotations)
    total = 0
    agreed = 0
    agreed_per_class = {label: 0 for label in Label}
    denominators = {label: 0 for label in Label}
    per_pair = []
    for pair_id in sorted(annotations.pairs):
        labels = annotations.pairs[pair_id]
        pair_total = len(labels)
        pair_agreed = 0
        for label_a, label_b in labels.values():
            if denominator_mode == "first-annotator":
                denominators[label_a] += 1
            else:
                for label in {label_a, label_b}:
                    denominators[label] += 1
            if label_a == label_b:
                pair_agreed += 1
                agreed_per_class[label_a] += 1
        total += pair_total
        agreed += pair_agreed
        per_pair.append(PairStats(pair_id, pair_total, pair_agreed))
    per_class = {
        label: (agreed_per_class[label] / denominators[label] if denominators[label] else None)
        for label in Label
    }
    return AgreementReport(
        total_quotes=total,
        agreed_quotes=agreed,
        agreed_per_class=agreed_per_class,
        overall_agreement=agreed / total if total else 0.0,
        per_class_agreement=per_class,
        per_pair=tuple(per_pair),
        denominator_mode=denominator_mode,
    )


def agreed_subset(corpus: Sequence[Quote], annotations: AnnotationSet) -> list[Quote]:
    """Quotes whose annotator pair agreed, with gold_label set to that label.

    Corpus order is preserved.
    """
    _check_annotations(corpus, annotations)
    agreed_labels: dict[str, Label] = {}
    for labels in annotations.pairs.values():
        for quote_id, (label_a, label_b) in labels.items():
            if label_a == label_b:
                agreed_labels[quote_id] = label_a
    return [
        replace(q, gold_label=agreed_labels[q.id]) for q in corpus if q.id in agreed_labels
    ]
