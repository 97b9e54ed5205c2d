"""Tokenization, target-mention matching and word-window arithmetic.

All functions here are pure and operate on immutable values; they are safe
to call from any number of workers.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .corpus import TargetSpec

_CHUNK_RE = re.compile(r"\S+")


@dataclass(frozen=True)
class Token:
    surface: str
    form: str
    index: int
    char_start: int
    char_end: int


@dataclass(frozen=True)
class MentionSpan:
    """Inclusive token index range where a target alias matched."""

    start: int
    end: int
    alias: tuple[str, ...]


@dataclass(frozen=True)
class WindowSpec:
    """Scoring window: `size` tokens around each mention, or the whole text.

    size=None means whole text.
    """

    size: int | None = None

    def __post_init__(self):
        if self.size is not None and self.size < 1:
            raise ValueError(f"window size must be >= 1, got {self.size}")

    @property
    def is_whole_text(self) -> bool:
        return self.size is None

    @classmethod
    def whole_text(cls) -> "WindowSpec":
        return cls(None)

    @classmethod
    def words(cls, size: int) -> "WindowSpec":
        return cls(size)

    @classmethod
    def parse(cls, text: str | int) -> "WindowSpec":
        if isinstance(text, int):
            return cls(text)
        if text.strip().lower() in ("whole", "whole-text", "whole_text"):
            return cls(None)
        try:
            size = int(text)
        except ValueError:
            raise ValueError(f"bad window spec {text!r}: expected 'whole' or a positive integer")
        return cls(size)

    @property
    def label(self) -> str:
        return "whole" if self.size is None else str(self.size)


WHOLE_TEXT = WindowSpec(None)


def _trim_punct(chunk: str) -> tuple[int, int]:
    # Leading/trailing Unicode punctuation is stripped; internal characters
    # (hyphens, apostrophes) stay untouched.
    lo, hi = 0, len(chunk)
    while lo < hi and unicodedata.category(chunk[lo]).startswith("P"):
        lo += 1
    while hi > lo and unicodedata.category(chunk[hi - 1]).startswith("P"):
        hi -= 1
    return lo, hi


def tokenize(text: str) -> list[Token]:
    """Split on whitespace, trim punctuation, lowercase the matching form.

    Chunks that are punctuation-only disappear entirely.
    """
    tokens: list[Token] = []
    for m in _CHUNK_RE.finditer(text):
        lo, hi = _trim_punct(m.group())
        if hi <= lo:
            continue
        start = m.start() + lo
        end = m.start() + hi
        surface = text[start:end]
        tokens.append(
            Token(
                surface=surface,
                form=surface.lower(),
                index=len(tokens),
                char_start=start,
                char_end=end,
            )
        )
    return tokens


def find_mentions(tokens: list[Token], target: "TargetSpec") -> list[MentionSpan]:
    """Locate non-overlapping target mentions, longest alias first.

    The scan is left to right; after a match it resumes past the matched
    span, so spans come out ordered and disjoint.
    """
    ordered = sorted(target.aliases, key=lambda a: (-len(a), a))
    forms = [t.form for t in tokens]
    spans: list[MentionSpan] = []
    i = 0
    n = len(forms)
    while i < n:
        matched = None
        for alias in ordered:
            k = len(alias)
            if k and i + k <= n and tuple(forms[i : i + k]) == alias:
                matched = MentionSpan(i, i + k - 1, alias)
                break
        if matched:
            spans.append(matched)
            i = matched.end + 1
        else:
            i += 1
    return spans


def window_indices(
    tokens: list[Token], mentions: list[MentionSpan], spec: WindowSpec
) -> set[int]:
    """Token indices eligible for sentiment matching around the mentions.

    Whole text: every index outside the mention spans. WORDS(w): the union
    of [start-w, end+w] ranges clipped to the text, minus mention indices.
    No mentions means an empty window; the caller decides what a missing
    target means.
    """
    if not mentions:
        return set()
    inside = {i for span in mentions for i in range(span.start, span.end + 1)}
    n = len(tokens)
    if spec.is_whole_text:
        return set(range(n)) - inside
    w = spec.size
    covered: set[int] = set()
    for span in mentions:
        covered.update(range(max(0, span.start - w), min(n - 1, span.end + w) + 1))
    return covered - inside
