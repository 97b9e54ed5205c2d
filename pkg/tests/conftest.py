from pathlib import Path

import pytest

from quotesent import (
    CategoryDefs,
    load_categories,
    load_corpus,
    load_lexicon,
)

ROOT = Path(__file__).resolve().parents[1]
DATA = ROOT / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA


@pytest.fixture(scope="session")
def sample_corpus():
    return load_corpus(DATA / "sample_corpus.jsonl")


@pytest.fixture(scope="session")
def sample_quotes_by_id(sample_corpus):
    return {q.id: q for q in sample_corpus}


@pytest.fixture(scope="session")
def unigrams_lexicon():
    return load_lexicon(DATA / "sample_lexicons" / "unigrams.lex")


@pytest.fixture(scope="session")
def idioms_lexicon():
    return load_lexicon(DATA / "sample_lexicons" / "idioms.lex")


@pytest.fixture(scope="session")
def sample_defs() -> CategoryDefs:
    return load_categories(DATA / "sample_categories.txt")


@pytest.fixture(scope="session")
def annotation_corpus():
    return load_corpus(DATA / "annotation_fixture" / "quotes.jsonl")
