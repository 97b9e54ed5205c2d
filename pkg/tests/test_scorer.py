import pytest

from quotesent import (
    CategoryDefs,
    Classification,
    Lexicon,
    LexiconEntry,
    PolarityClass,
    Quote,
    ScoreConfig,
    TargetSpec,
    WindowSpec,
    breakdown_to_dict,
    classify,
    find_mentions,
    match_hits,
    score_corpus,
    score_quote,
    tokenize,
    window_indices,
)


def lex(name, rows):
    return Lexicon(
        name, [LexiconEntry(tuple(s.split()), PolarityClass[c], name) for s, c in rows]
    )


def quote(text, alias_strings, categories=(), qid="q"):
    return Quote(
        id=qid,
        text=text,
        source="s",
        target=TargetSpec.with_aliases("target", alias_strings),
        categories=frozenset(categories),
    )


class TestMatchHits:
    def test_multiword_idiom_single_hit(self):
        tokens = tokenize("They have stirred the hornet's nest.")
        window = set(range(len(tokens)))
        lexicon = lex("idioms", [("stirred the hornet's nest", "HIGH_NEGATIVE")])
        hits = match_hits(tokens, window, lexicon)
        assert len(hits) == 1
        assert hits[0].score == -4
        assert (hits[0].token_start, hits[0].token_end) == (2, 5)

    def test_empty_lexicon(self):
        tokens = tokenize("anything at all")
        assert match_hits(tokens, set(range(3)), lex("none", [])) == []

    def test_longest_surface_wins(self):
        tokens = tokenize("such warm words today")
        window = set(range(len(tokens)))
        lexicon = lex("both", [("warm", "POSITIVE"), ("warm words", "POSITIVE")])
        hits = match_hits(tokens, window, lexicon)
        assert [h.surface_form for h in hits] == ["warm words"]

    def test_multiword_needs_all_indices_in_window(self):
        tokens = tokenize("very warm words today")
        lexicon = lex("both", [("warm", "POSITIVE"), ("warm words", "POSITIVE")])
        # "words" (index 2) outside the window: only the unigram can match
        hits = match_hits(tokens, {0, 1, 3}, lexicon)
        assert [h.surface_form for h in hits] == ["warm"]

    def test_matches_do_not_overlap(self):
        tokens = tokenize("warm warm warm")
        lexicon = lex("w", [("warm warm", "POSITIVE"), ("warm", "POSITIVE")])
        hits = match_hits(tokens, {0, 1, 2}, lexicon)
        assert [(h.token_start, h.token_end) for h in hits] == [(0, 1), (2, 2)]

    def test_repeated_words_count_per_occurrence(self):
        tokens = tokenize("good good good")
        lexicon = lex("g", [("good", "POSITIVE")])
        hits = match_hits(tokens, {0, 1, 2}, lexicon)
        assert len(hits) == 3

    def test_window_growth_can_resegment_multiword_matches(self):
        # hit SPANS are not nested across window sizes: once the window
        # reaches "warm", greedy matching takes the longer surface instead
        tokens = tokenize("warm words target")
        lexicon = lex("b", [("warm words", "POSITIVE"), ("words", "POSITIVE")])
        narrow = match_hits(tokens, {1}, lexicon)
        wide = match_hits(tokens, {0, 1}, lexicon)
        assert [h.surface_form for h in narrow] == ["words"]
        assert [h.surface_form for h in wide] == ["warm words"]


class TestScoreQuote:
    def test_wrong_target_contamination(self):
        q = quote("I've had two excellent meetings with Keller.", ["Keller"])
        lexicon = lex("u", [("excellent", "POSITIVE")])
        breakdown = score_quote(q, lexicon, None, ScoreConfig(window=WindowSpec.words(6)))
        assert breakdown.total == 1
        assert classify(breakdown) is Classification.POSITIVE

    def test_category_word_filtered(self):
        q = quote("The crisis will test Keller this year.", ["Keller"], categories=["finance"])
        lexicon = lex("u", [("crisis", "NEGATIVE")])
        defs = CategoryDefs({"finance": frozenset({"crisis"})})
        config = ScoreConfig(window=WindowSpec.words(6), alerts_filter=True)
        breakdown = score_quote(q, lexicon, defs, config)
        assert [h.filtered for h in breakdown.hits] == [True]
        assert breakdown.total == 0
        assert classify(breakdown) is Classification.OBJECTIVE

    def test_filtering_off_keeps_hit(self):
        q = quote("The crisis will test Keller this year.", ["Keller"], categories=["finance"])
        lexicon = lex("u", [("crisis", "NEGATIVE")])
        defs = CategoryDefs({"finance": frozenset({"crisis"})})
        config = ScoreConfig(window=WindowSpec.words(6), alerts_filter=False)
        breakdown = score_quote(q, lexicon, defs, config)
        assert breakdown.total == -1

    def test_target_not_found(self):
        q = quote("Nothing relevant here.", ["Keller"])
        breakdown = score_quote(q, lex("u", [("nothing", "NEGATIVE")]))
        assert breakdown.outcome == "target_not_found"
        assert breakdown.total == 0
        assert breakdown.hits == ()
        assert classify(breakdown) is Classification.TARGET_NOT_FOUND

    def test_total_is_sum_of_unfiltered_scores(self, sample_corpus, unigrams_lexicon, sample_defs):
        config = ScoreConfig(window=WindowSpec.words(6))
        for q in sample_corpus:
            breakdown = score_quote(q, unigrams_lexicon, sample_defs, config)
            assert breakdown.total == sum(h.score for h in breakdown.hits if not h.filtered)

    def test_hits_never_overlap_mentions(self, sample_corpus, idioms_lexicon, sample_defs):
        config = ScoreConfig(window=WindowSpec.words(10))
        for q in sample_corpus:
            breakdown = score_quote(q, idioms_lexicon, sample_defs, config)
            mention_idx = {
                i for m in breakdown.mentions for i in range(m.start, m.end + 1)
            }
            for h in breakdown.hits:
                assert not (set(range(h.token_start, h.token_end + 1)) & mention_idx)

    def test_empty_defs_alerts_identical(self, sample_corpus, unigrams_lexicon):
        for q in sample_corpus:
            on = score_quote(q, unigrams_lexicon, CategoryDefs.empty(),
                             ScoreConfig(window=WindowSpec.words(6), alerts_filter=True))
            off = score_quote(q, unigrams_lexicon, CategoryDefs.empty(),
                              ScoreConfig(window=WindowSpec.words(6), alerts_filter=False))
            assert on == off

    def test_window_matching_is_position_restricted(self):
        # sentiment word exists in the text but outside the window
        q = quote("excellent start but Keller wants more than this now okay", ["Keller"])
        lexicon = lex("u", [("excellent", "POSITIVE")])
        near = score_quote(q, lexicon, None, ScoreConfig(window=WindowSpec.words(2)))
        assert near.total == 0
        far = score_quote(q, lexicon, None, ScoreConfig(window=WindowSpec.words(3)))
        assert far.total == 1


class TestClassify:
    def zero_breakdown(self, total):
        q = quote("Keller spoke.", ["Keller"])
        breakdown = score_quote(q, lex("e", []))
        return breakdown.__class__(
            quote_id=breakdown.quote_id,
            mentions=breakdown.mentions,
            window=breakdown.window,
            hits=(),
            total=total,
            outcome="scored",
        )

    def test_zero_is_objective(self):
        assert classify(self.zero_breakdown(0), 0) is Classification.OBJECTIVE

    def test_threshold_widens_objective_band(self):
        assert classify(self.zero_breakdown(1), 0) is Classification.POSITIVE
        assert classify(self.zero_breakdown(1), 1) is Classification.OBJECTIVE
        assert classify(self.zero_breakdown(-1), 1) is Classification.OBJECTIVE

    def test_negative_total(self):
        assert classify(self.zero_breakdown(-4), 0) is Classification.NEGATIVE


class TestMirrorSymmetry:
    def test_totals_negate_and_labels_flip(self, sample_corpus, unigrams_lexicon, sample_defs):
        mirrored = unigrams_lexicon.mirrored()
        config = ScoreConfig(window=WindowSpec.words(6))
        for q in sample_corpus:
            a = score_quote(q, unigrams_lexicon, sample_defs, config)
            b = score_quote(q, mirrored, sample_defs, config)
            assert b.total == -a.total
            la, lb = classify(a), classify(b)
            flips = {
                Classification.POSITIVE: Classification.NEGATIVE,
                Classification.NEGATIVE: Classification.POSITIVE,
            }
            assert lb is flips.get(la, la)


class TestScoreCorpus:
    def test_parallel_equals_sequential(self, sample_corpus, idioms_lexicon, sample_defs):
        config = ScoreConfig(window=WindowSpec.words(6))
        seq = score_corpus(sample_corpus, idioms_lexicon, sample_defs, config, n_jobs=1)
        par = score_corpus(sample_corpus, idioms_lexicon, sample_defs, config, n_jobs=4)
        assert seq == par


class TestBreakdownExport:
    def test_json_payload_shape(self):
        q = quote("Keller gave warm words to the crowd.", ["Keller"], qid="qx")
        lexicon = lex("i", [("warm words", "POSITIVE")])
        breakdown = score_quote(q, lexicon, None, ScoreConfig(window=WindowSpec.words(6)))
        payload = breakdown_to_dict(breakdown)
        assert payload["quote_id"] == "qx"
        assert payload["outcome"] == "scored"
        assert payload["window"] == "6"
        assert payload["mentions"] == [{"start": 0, "end": 0, "alias": "keller"}]
        assert payload["hits"] == [
            {
                "start": 2, "end": 3, "surface": "warm words",
                "class": "POSITIVE", "score": 1, "filtered": False,
            }
        ]
        assert payload["total"] == 1


class TestScoreConfig:
    def test_bad_filter_mode(self):
        with pytest.raises(ValueError):
            ScoreConfig(filter_mode="everything")

    def test_negative_threshold(self):
        with pytest.raises(ValueError):
            ScoreConfig(neutral_threshold=-1)


class TestEdgeCases:
    def test_multiword_crossing_mention_suppressed(self):
        # the 3-token surface spans the excluded mention index, so only the
        # unigram matches on each side
        q = quote("good mark good", ["mark"])
        lexicon = lex("t", [("good mark good", "HIGH_POSITIVE"), ("good", "POSITIVE")])
        breakdown = score_quote(q, lexicon, None, ScoreConfig(window=WindowSpec.words(5)))
        assert [h.surface_form for h in breakdown.hits] == ["good", "good"]
        assert breakdown.total == 2

    def test_target_name_is_never_evidence(self):
        q = quote("evil said evil things", ["evil"])
        lexicon = lex("t", [("evil", "HIGH_NEGATIVE")])
        breakdown = score_quote(q, lexicon, None, ScoreConfig(window=WindowSpec.words(10)))
        assert len(breakdown.mentions) == 2
        assert breakdown.total == 0

    def test_mention_only_text_scores_zero(self):
        q = quote("mark", ["mark"])
        breakdown = score_quote(q, lex("t", [("mark", "NEGATIVE")]))
        assert breakdown.outcome == "scored"
        assert breakdown.total == 0

    def test_multiword_category_phrase_filters_multiword_hit(self):
        q = quote("the credit crunch hurt mark", ["mark"], categories=["fin"])
        lexicon = lex("t", [("credit crunch", "NEGATIVE")])
        defs = CategoryDefs({"fin": frozenset({"credit crunch"})})
        breakdown = score_quote(q, lexicon, defs, ScoreConfig(alerts_filter=True))
        assert [h.filtered for h in breakdown.hits] == [True]
        assert breakdown.total == 0

    def test_total_at_exact_threshold_is_objective(self):
        q = quote("good good mark", ["mark"])
        lexicon = lex("t", [("good", "POSITIVE")])
        config = ScoreConfig(window=WindowSpec.words(6), neutral_threshold=2)
        breakdown = score_quote(q, lexicon, None, config)
        assert breakdown.total == 2
        assert classify(breakdown, 2) is Classification.OBJECTIVE


class TestWindowedScanEquivalence:
    """Matching inside the window equals matching globally then keeping
    hits whose indices all fall in the window, for unigram lexicons."""

    def test_unigram_equivalence(self, sample_corpus, unigrams_lexicon):
        for q in sample_corpus:
            tokens = tokenize(q.text)
            mentions = find_mentions(tokens, q.target)
            if not mentions:
                continue
            window = window_indices(tokens, mentions, WindowSpec.words(4))
            windowed = match_hits(tokens, window, unigrams_lexicon)
            globally = match_hits(tokens, set(range(len(tokens))), unigrams_lexicon)
            kept = [h for h in globally if h.token_start in window]
            assert [(h.token_start, h.surface_form) for h in windowed] == [
                (h.token_start, h.surface_form) for h in kept
            ]
