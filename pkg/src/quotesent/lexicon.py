"""Sentiment lexicons: four polarity classes with fixed integer scores.

Entries map a surface form (one or more lowercase words, so idioms like
"stirred the hornet's nest" are first-class) to one of four classes scored
+1 / -1 / +4 / -4. Loaders, a graded-resource converter and two merge
strategies produce `Lexicon` objects, which are immutable after
construction and safe for concurrent reads.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Iterator, Sequence

from .errors import InputFormatError


class PolarityClass(enum.Enum):
    POSITIVE = "POSITIVE"
    NEGATIVE = "NEGATIVE"
    HIGH_POSITIVE = "HIGH_POSITIVE"
    HIGH_NEGATIVE = "HIGH_NEGATIVE"

    @property
    def score(self) -> int:
        return _CLASS_SCORES[self]

    def mirror(self) -> "PolarityClass":
        return _MIRROR[self]


_CLASS_SCORES = {
    PolarityClass.POSITIVE: 1,
    PolarityClass.NEGATIVE: -1,
    PolarityClass.HIGH_POSITIVE: 4,
    PolarityClass.HIGH_NEGATIVE: -4,
}

_MIRROR = {
    PolarityClass.POSITIVE: PolarityClass.NEGATIVE,
    PolarityClass.NEGATIVE: PolarityClass.POSITIVE,
    PolarityClass.HIGH_POSITIVE: PolarityClass.HIGH_NEGATIVE,
    PolarityClass.HIGH_NEGATIVE: PolarityClass.HIGH_POSITIVE,
}


def score_of(polarity: PolarityClass) -> int:
    """Fixed class-to-score table: +1, -1, +4, -4."""
    return _CLASS_SCORES[polarity]


@dataclass(frozen=True)
class LexiconEntry:
    surface: tuple[str, ...]
    polarity: PolarityClass
    source: str

    def __post_init__(self):
        if not self.surface:
            raise ValueError("entry surface must contain at least one word form")
        for form in self.surface:
            if not form or any(ch.isspace() for ch in form):
                raise ValueError(f"bad word form {form!r} in surface {self.surface!r}")
            if form != form.lower():
                raise ValueError(f"surface forms must be lowercase, got {form!r}")

    @property
    def score(self) -> int:
        return _CLASS_SCORES[self.polarity]

    @property
    def surface_text(self) -> str:
        return " ".join(self.surface)


@dataclass(frozen=True)
class GradedEntry:
    """Ingestion shape for graded resources: independent positivity/negativity."""

    surface: tuple[str, ...]
    positivity: float
    negativity: float

    def __post_init__(self):
        for name, value in (("positivity", self.positivity), ("negativity", self.negativity)):
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {value}")


class Lexicon:
    """A set of entries keyed by surface sequence; at most one per surface."""

    def __init__(self, name: str, entries: Iterable[LexiconEntry] = ()):
        self.name = name
        self._entries: dict[tuple[str, ...], LexiconEntry] = {}
        for entry in entries:
            if entry.surface in self._entries:
                raise ValueError(f"duplicate surface {entry.surface_text!r} in lexicon {name!r}")
            self._entries[entry.surface] = entry
        self._by_first: dict[str, list[LexiconEntry]] | None = None

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[LexiconEntry]:
        return iter(self._entries.values())

    def __contains__(self, surface: Sequence[str]) -> bool:
        return tuple(surface) in self._entries

    def get(self, surface: Sequence[str]) -> LexiconEntry | None:
        return self._entries.get(tuple(surface))

    def surfaces(self) -> Iterable[tuple[str, ...]]:
        return self._entries.keys()

    def by_first_form(self) -> dict[str, list[LexiconEntry]]:
        """Entries grouped by first word, longest surface first (cached)."""
        if self._by_first is None:
            grouped: dict[str, list[LexiconEntry]] = {}
            for entry in self._entries.values():
                grouped.setdefault(entry.surface[0], []).append(entry)
            for bucket in grouped.values():
                bucket.sort(key=lambda e: (-len(e.surface), e.surface))
            self._by_first = grouped
        return self._by_first

    def mirrored(self) -> "Lexicon":
        """Same surfaces with every class replaced by its opposite."""
        return Lexicon(
            f"{self.name}(mirrored)",
            (
                LexiconEntry(e.surface, e.polarity.mirror(), e.source)
                for e in self._entries.values()
            ),
        )

    def __repr__(self) -> str:
        return f"Lexicon({self.name!r}, {len(self)} entries)"


def _surface_from_text(text: str) -> tuple[str, ...]:
    return tuple(text.lower().split())


def load_lexicon(path: str | Path, name: str | None = None) -> Lexicon:
    """Read a four-class lexicon file: `surface<TAB>CLASS`, `#` comments.

    Raises InputFormatError naming the offending line on malformed rows,
    unknown class tokens and duplicate surfaces.
    """
    path = Path(path)
    if not path.exists():
        raise InputFormatError(str(path), None, "lexicon file not found")
    name = name if name is not None else path.stem
    entries: dict[tuple[str, ...], LexiconEntry] = {}
    with open(path, encoding="utf-8") as f:
        for line_no, raw in enumerate(f, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise InputFormatError(
                    str(path), line_no, f"expected `surface<TAB>CLASS`, got {line!r}"
                )
            surface_text, class_token = parts
            surface = _surface_from_text(surface_text)
            if not surface:
                raise InputFormatError(str(path), line_no, "empty surface")
            try:
                polarity = PolarityClass(class_token.strip())
            except ValueError:
                raise InputFormatError(
                    str(path), line_no, f"unknown class token {class_token.strip()!r}"
                )
            if surface in entries:
                raise InputFormatError(
                    str(path), line_no, f"duplicate surface {' '.join(surface)!r}"
                )
            entries[surface] = LexiconEntry(surface, polarity, name)
    return Lexicon(name, entries.values())


def save_lexicon(lexicon: Lexicon, out: IO[str]) -> None:
    """Serialize in the same tab-separated format load_lexicon reads."""
    for entry in lexicon:
        out.write(f"{entry.surface_text}\t{entry.polarity.value}\n")


def load_graded(path: str | Path) -> list[GradedEntry]:
    """Read a graded lexicon file: `surface<TAB>positivity<TAB>negativity`."""
    path = Path(path)
    if not path.exists():
        raise InputFormatError(str(path), None, "graded lexicon file not found")
    entries = []
    with open(path, encoding="utf-8") as f:
        for line_no, raw in enumerate(f, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise InputFormatError(
                    str(path), line_no,
                    f"expected `surface<TAB>positivity<TAB>negativity`, got {line!r}",
                )
            surface = _surface_from_text(parts[0])
            if not surface:
                raise InputFormatError(str(path), line_no, "empty surface")
            try:
                pos, neg = float(parts[1]), float(parts[2])
                entries.append(GradedEntry(surface, pos, neg))
            except ValueError as exc:
                raise InputFormatError(str(path), line_no, str(exc))
    return entries


def convert_graded(
    entries: Iterable[GradedEntry],
    high_threshold: float = 0.5,
    name: str = "converted",
) -> tuple[Lexicon, list[GradedEntry]]:
    """Map graded entries onto the four classes by their dominant dimension.

    Whichever of positivity/negativity is strictly larger decides the sign;
    the class is HIGH_* when that value reaches high_threshold. Ties carry
    no usable signal and are dropped; they come back as the second element
    so callers can report them.
    """
    if not 0.0 < high_threshold <= 1.0:
        raise ValueError(f"high_threshold must be in (0, 1], got {high_threshold}")
    converted: dict[tuple[str, ...], LexiconEntry] = {}
    dropped: list[GradedEntry] = []
    for entry in entries:
        if entry.positivity == entry.negativity:
            dropped.append(entry)
            continue
        if entry.positivity > entry.negativity:
            dominant, high, plain = (
                entry.positivity, PolarityClass.HIGH_POSITIVE, PolarityClass.POSITIVE,
            )
        else:
            dominant, high, plain = (
                entry.negativity, PolarityClass.HIGH_NEGATIVE, PolarityClass.NEGATIVE,
            )
        polarity = high if dominant >= high_threshold else plain
        converted[entry.surface] = LexiconEntry(entry.surface, polarity, name)
    return Lexicon(name, converted.values()), dropped


def _class_for_sum(total: int) -> PolarityClass | None:
    if total >= 2:
        return PolarityClass.HIGH_POSITIVE
    if total == 1:
        return PolarityClass.POSITIVE
    if total == -1:
        return PolarityClass.NEGATIVE
    if total <= -2:
        return PolarityClass.HIGH_NEGATIVE
    return None  # sum 0: contradictory evidence, dropped


def merge(lexicons: Sequence[Lexicon], strategy: str = "priority-first") -> Lexicon:
    """Combine lexicons into one.

    priority-first: the earliest lexicon in the list wins each surface.
    additive: per-surface scores are summed and mapped back to the nearest
    class (>= +2 high positive, +1 positive, -1 negative, <= -2 high
    negative); a zero sum drops the surface.
    """
    if not lexicons:
        raise ValueError("merge needs at least one lexicon")
    if strategy not in ("priority-first", "additive"):
        raise ValueError(f"unknown merge strategy {strategy!r}")
    merged_name = "+".join(lx.name for lx in lexicons) + f"({strategy})"
    entries: list[LexiconEntry] = []
    if strategy == "priority-first":
        seen: set[tuple[str, ...]] = set()
        for lx in lexicons:
            for entry in lx:
                if entry.surface not in seen:
                    seen.add(entry.surface)
                    entries.append(entry)
    else:
        sums: dict[tuple[str, ...], int] = {}
        for lx in lexicons:
            for entry in lx:
                sums[entry.surface] = sums.get(entry.surface, 0) + entry.score
        for surface, total in sums.items():
            polarity = _class_for_sum(total)
            if polarity is not None:
                entries.append(LexiconEntry(surface, polarity, merged_name))
    return Lexicon(merged_name, entries)
