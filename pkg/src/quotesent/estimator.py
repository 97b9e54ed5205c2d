"""scikit-learn style estimator wrapping the scoring pipeline.

`QuoteSentimentClassifier` is dictionary-driven, so `fit` learns nothing; it
validates parameters and marks the estimator ready, which keeps the class
usable inside sklearn pipelines, grid searches over its parameters, and
`clone`. X is a sequence of `Quote` objects; predictions are the lowercase
label strings.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError

from .categoryfilter import FILTER_MODES, CategoryDefs
from .corpus import Quote
from .lexicon import Lexicon
from .scorer import ScoreBreakdown, ScoreConfig, classify, score_corpus
from .textproc import WindowSpec


def check_quotes(X) -> list[Quote]:
    """Validate that X is a sequence of Quote objects; returns it as a list."""
    quotes = list(X)
    for i, q in enumerate(quotes):
        if not isinstance(q, Quote):
            raise TypeError(f"X[{i}] is {type(q).__name__}, expected Quote")
    return quotes


def check_window(window) -> WindowSpec:
    """Accept a WindowSpec, 'whole', or a positive integer / integer string."""
    if isinstance(window, WindowSpec):
        return window
    return WindowSpec.parse(window)


class QuoteSentimentClassifier(BaseEstimator):
    """Classify the sentiment a quote expresses toward its target entity.

    Parameters
    ----------
    lexicon : Lexicon
        Sentiment vocabulary with four-class integer scores.
    category_defs : CategoryDefs or None
        Subject-domain definitions for alert filtering; None disables it
        implicitly (empty definitions filter nothing).
    window : 'whole', int or WindowSpec
        How many tokens around each target mention are scored.
    alerts_filter : bool
        Discard hits that are also category words.
    filter_mode : 'tagged' or 'global'
        Whether filtering consults only the quote's tagged categories or all.
    neutral_threshold : int
        |total| <= threshold classifies as objective.
    n_jobs : int or None
        Degree of data parallelism for predict; output is identical for any
        value.
    """

    def __init__(
        self,
        lexicon: Lexicon | None = None,
        category_defs: CategoryDefs | None = None,
        window="whole",
        alerts_filter: bool = True,
        filter_mode: str = "tagged",
        neutral_threshold: int = 0,
        n_jobs: int | None = None,
    ):
        self.lexicon = lexicon
        self.category_defs = category_defs
        self.window = window
        self.alerts_filter = alerts_filter
        self.filter_mode = filter_mode
        self.neutral_threshold = neutral_threshold
        self.n_jobs = n_jobs

    def fit(self, X=None, y=None):
        """Validate parameters; nothing is learned. Returns self."""
        if not isinstance(self.lexicon, Lexicon):
            raise ValueError("lexicon parameter must be a Lexicon instance")
        if self.category_defs is not None and not isinstance(self.category_defs, CategoryDefs):
            raise ValueError("category_defs must be a CategoryDefs or None")
        if self.filter_mode not in FILTER_MODES:
            raise ValueError(f"filter_mode must be one of {FILTER_MODES}")
        if not isinstance(self.neutral_threshold, int) or self.neutral_threshold < 0:
            raise ValueError("neutral_threshold must be a non-negative integer")
        self.config_ = ScoreConfig(
            window=check_window(self.window),
            alerts_filter=bool(self.alerts_filter),
            filter_mode=self.filter_mode,
            neutral_threshold=self.neutral_threshold,
        )
        self.classes_ = np.array(["negative", "objective", "positive", "target_not_found"])
        return self

    def _check_fitted(self):
        if not hasattr(self, "config_"):
            raise NotFittedError(
                "This QuoteSentimentClassifier instance is not fitted yet; call fit first."
            )

    def predict_breakdowns(self, X: Sequence[Quote]) -> list[ScoreBreakdown]:
        """Full scoring traces, one per quote, in input order."""
        self._check_fitted()
        quotes = check_quotes(X)
        return score_corpus(
            quotes, self.lexicon, self.category_defs, self.config_, n_jobs=self.n_jobs
        )

    def predict(self, X: Sequence[Quote]) -> np.ndarray:
        """Label strings: positive / negative / objective / target_not_found."""
        return np.array(
            [
                classify(b, self.config_.neutral_threshold).value
                for b in self.predict_breakdowns(X)
            ]
        )
