"""Target-centric, lexicon-based sentiment classification for news quotations.

Separates the sentiment expressed toward a named target from good/bad news
content: sentiment words are counted only inside word windows around the
target's mentions, and words that also define the quote's subject-domain
categories ("crisis", "disaster", ...) can be excluded as alert words.
"""

from .categoryfilter import CategoryDefs, is_category_word, load_categories
from .corpus import (
    AgreementReport,
    AnnotationSet,
    Label,
    Quote,
    TargetSpec,
    agreed_subset,
    compute_agreement,
    derive_aliases,
    dump_corpus,
    load_annotations,
    load_corpus,
)
from .errors import InputFormatError, QuoteSentError
from .evaluation import (
    EvalGrid,
    EvalResult,
    evaluate,
    majority_baseline,
    render_report,
    run_grid,
)
from .lexicon import (
    GradedEntry,
    Lexicon,
    LexiconEntry,
    PolarityClass,
    convert_graded,
    load_graded,
    load_lexicon,
    merge,
    save_lexicon,
    score_of,
)
from .scorer import (
    Classification,
    Hit,
    ScoreBreakdown,
    ScoreConfig,
    breakdown_to_dict,
    classify,
    match_hits,
    score_corpus,
    score_quote,
)
from .textproc import (
    WHOLE_TEXT,
    MentionSpan,
    Token,
    WindowSpec,
    find_mentions,
    tokenize,
    window_indices,
)

__version__ = "0.1.0"


def __getattr__(name):
    # the estimator pulls in numpy/scikit-learn; keep that off the import
    # path of everything else
    if name == "QuoteSentimentClassifier":
        from .estimator import QuoteSentimentClassifier

        return QuoteSentimentClassifier
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")

__all__ = [
    "AgreementReport",
    "AnnotationSet",
    "CategoryDefs",
    "Classification",
    "EvalGrid",
    "EvalResult",
    "GradedEntry",
    "Hit",
    "InputFormatError",
    "Label",
    "Lexicon",
    "LexiconEntry",
    "MentionSpan",
    "PolarityClass",
    "Quote",
    "QuoteSentError",
    "QuoteSentimentClassifier",
    "ScoreBreakdown",
    "ScoreConfig",
    "TargetSpec",
    "Token",
    "WHOLE_TEXT",
    "WindowSpec",
    "agreed_subset",
    "breakdown_to_dict",
    "classify",
    "compute_agreement",
    "convert_graded",
    "derive_aliases",
    "dump_corpus",
    "evaluate",
    "find_mentions",
    "is_category_word",
    "load_annotations",
    "load_categories",
    "load_corpus",
    "load_graded",
    "load_lexicon",
    "majority_baseline",
    "match_hits",
    "merge",
    "render_report",
    "run_grid",
    "save_lexicon",
    "score_corpus",
    "score_of",
    "score_quote",
    "tokenize",
    "window_indices",
]
