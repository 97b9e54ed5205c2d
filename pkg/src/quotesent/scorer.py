"""Window-restricted lexicon scoring and quote classification.

The pipeline per quote: tokenize, find target mentions, build the word
window, greedily match lexicon surfaces inside it (longest first), discard
category words if alert filtering is on, sum what survives. Everything is a
pure function of its inputs, so quotes can be scored in parallel with
bit-identical results.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .categoryfilter import FILTER_MODES, CategoryDefs, is_category_word
from .corpus import Quote
from .lexicon import Lexicon, PolarityClass
from .textproc import (
    MentionSpan,
    Token,
    WindowSpec,
    find_mentions,
    tokenize,
    window_indices,
)


class Classification(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    OBJECTIVE = "objective"
    TARGET_NOT_FOUND = "target_not_found"


@dataclass(frozen=True)
class ScoreConfig:
    window: WindowSpec = field(default_factory=WindowSpec.whole_text)
    alerts_filter: bool = True
    filter_mode: str = "tagged"
    neutral_threshold: int = 0

    def __post_init__(self):
        if self.filter_mode not in FILTER_MODES:
            raise ValueError(
                f"unknown filter mode {self.filter_mode!r}, expected one of {FILTER_MODES}"
            )
        if self.neutral_threshold < 0:
            raise ValueError(
                f"neutral_threshold must be >= 0, got {self.neutral_threshold}"
            )


@dataclass(frozen=True)
class Hit:
    """One lexicon match inside the window. Filtered hits contribute nothing."""

    token_start: int
    token_end: int
    surface_form: str
    polarity: PolarityClass
    score: int
    filtered: bool = False


@dataclass(frozen=True)
class ScoreBreakdown:
    quote_id: str
    mentions: tuple[MentionSpan, ...]
    window: WindowSpec
    hits: tuple[Hit, ...]
    total: int
    outcome: str  # "scored" | "target_not_found"

    @property
    def target_found(self) -> bool:
        return self.outcome == "scored"


def match_hits(tokens: list[Token], window: set[int], lexicon: Lexicon) -> list[Hit]:
    """Greedy longest-first lexicon matching over the window index set.

    A surface matches at i when its words equal the forms at consecutive
    indices i..i+k-1 and every one of those indices is in the window.
    Matches never overlap; the scan resumes after each match. Hits come
    back unfiltered; alert filtering is the caller's second pass.
    """
    by_first = lexicon.by_first_form()
    hits: list[Hit] = []
    n = len(tokens)
    consumed_until = -1
    for i in sorted(window):
        if i <= consumed_until:
            continue
        for entry in by_first.get(tokens[i].form, ()):
            k = len(entry.surface)
            if i + k > n:
                continue
            if all(
                tokens[i + j].form == entry.surface[j] and (i + j) in window
                for j in range(k)
            ):
                hits.append(
                    Hit(
                        token_start=i,
                        token_end=i + k - 1,
                        surface_form=entry.surface_text,
                        polarity=entry.polarity,
                        score=entry.score,
                    )
                )
                consumed_until = i + k - 1
                break
    return hits


def score_quote(
    quote: Quote,
    lexicon: Lexicon,
    defs: CategoryDefs | None = None,
    config: ScoreConfig = ScoreConfig(),
) -> ScoreBreakdown:
    """Score one quote; all failure modes are encoded in the outcome field."""
    defs = defs if defs is not None else CategoryDefs.empty()
    tokens = tokenize(quote.text)
    mentions = find_mentions(tokens, quote.target)
    if not mentions:
        return ScoreBreakdown(
            quote_id=quote.id,
            mentions=(),
            window=config.window,
            hits=(),
            total=0,
            outcome="target_not_found",
        )
    window = window_indices(tokens, mentions, config.window)
    hits = match_hits(tokens, window, lexicon)
    if config.alerts_filter:
        hits = [
            Hit(
                h.token_start, h.token_end, h.surface_form, h.polarity, h.score,
                filtered=is_category_word(
                    h.surface_form, quote.categories, defs, config.filter_mode
                ),
            )
            for h in hits
        ]
    total = sum(h.score for h in hits if not h.filtered)
    return ScoreBreakdown(
        quote_id=quote.id,
        mentions=tuple(mentions),
        window=config.window,
        hits=tuple(hits),
        total=total,
        outcome="scored",
    )


def classify(breakdown: ScoreBreakdown, neutral_threshold: int = 0) -> Classification:
    """Sign of the total decides; |total| <= threshold reads as no sentiment."""
    if not breakdown.target_found:
        return Classification.TARGET_NOT_FOUND
    if breakdown.total > neutral_threshold:
        return Classification.POSITIVE
    if breakdown.total < -neutral_threshold:
        return Classification.NEGATIVE
    return Classification.OBJECTIVE


def score_corpus(
    quotes: list[Quote],
    lexicon: Lexicon,
    defs: CategoryDefs | None = None,
    config: ScoreConfig = ScoreConfig(),
    n_jobs: int | None = None,
) -> list[ScoreBreakdown]:
    """Score quotes in input order, optionally in parallel.

    Results are independent of n_jobs: scoring is pure and joblib preserves
    submission order.
    """
    if n_jobs is None or n_jobs == 1:
        return [score_quote(q, lexicon, defs, config) for q in quotes]
    from joblib import Parallel, delayed  # deferred: only parallel runs pay for it

    return Parallel(n_jobs=n_jobs)(
        delayed(score_quote)(q, lexicon, defs, config) for q in quotes
    )


def breakdown_to_dict(breakdown: ScoreBreakdown) -> dict:
    """JSON-ready export of a breakdown (the `classify --explain` payload)."""
    return {
        "quote_id": breakdown.quote_id,
        "outcome": breakdown.outcome,
        "window": breakdown.window.label,
        "mentions": [
            {"start": m.start, "end": m.end, "alias": " ".join(m.alias)}
            for m in breakdown.mentions
        ],
        "hits": [
            {
                "start": h.token_start,
                "end": h.token_end,
                "surface": h.surface_form,
                "class": h.polarity.value,
                "score": h.score,
                "filtered": h.filtered,
            }
            for h in breakdown.hits
        ],
        "total": breakdown.total,
    }
