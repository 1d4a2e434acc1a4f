"""Tests for the ROUGE metrics against hand-enumerated and brute-force oracles."""

import random
from collections import Counter

import pytest

from maniquery.rouge import (
    ALL_METRICS,
    R1,
    R2,
    RSU4,
    RW,
    Score,
    _wlcs,
    compute_rouge,
    evaluate_summary,
    rouge_n,
    rouge_su4,
    rouge_tokenize,
    rouge_w,
)

A = "average"
M = "micro"
J = "jackknife"

# Hand-enumerated fixed cases: (label, metric, cand, refs, mode, P, R, F1).
FIXED_CASES = [
    ("r1_cat_sat", R1, "the cat sat", ["the cat"], A, 2 / 3, 1.0, 0.8),
    ("r1_identical", R1, "a b c", ["a b c"], A, 1.0, 1.0, 1.0),
    ("r1_disjoint", R1, "a b", ["c d"], A, 0.0, 0.0, 0.0),
    ("r1_empty_cand", R1, "", ["a"], A, 0.0, 0.0, 0.0),
    ("r1_clipped_both", R1, "a a b", ["a b b"], A, 2 / 3, 2 / 3, 2 / 3),
    ("r1_clip_cand", R1, "a a a", ["a"], A, 1 / 3, 1.0, 0.5),
    ("r1_clip_ref", R1, "a", ["a a a"], A, 1.0, 1 / 3, 0.5),
    ("r1_half", R1, "a b c d", ["b d"], A, 0.5, 1.0, 2 / 3),
    ("r1_five_four", R1, "a b c d e", ["a c e g"], A, 3 / 5, 3 / 4, 2 / 3),
    ("r1_repeat", R1, "the the the", ["the the"], A, 2 / 3, 1.0, 0.8),
    ("r1_avg_two_refs", R1, "a b", ["a b", "c d"], A, 0.5, 0.5, 0.5),
    ("r1_micro_pool", R1, "a", ["a", "a b c"], M, 1.0, 0.5, 2 / 3),
    ("r1_avg_contrast", R1, "a", ["a", "a b c"], A, 1.0, 2 / 3, 0.75),
    ("r2_identical", R2, "a b c", ["a b c"], A, 1.0, 1.0, 1.0),
    ("r2_cat_sat", R2, "the cat sat", ["the cat"], A, 0.5, 1.0, 2 / 3),
    ("r2_order_matters", R2, "a b", ["b a"], A, 0.0, 0.0, 0.0),
    ("r2_single_token", R2, "a", ["a b"], A, 0.0, 0.0, 0.0),
    ("r2_clipped", R2, "a b a b", ["a b"], A, 1 / 3, 1.0, 0.5),
    ("r2_suffix", R2, "a b c d", ["b c d"], A, 2 / 3, 1.0, 0.8),
    ("rsu4_pair", RSU4, "a b", ["a b"], A, 1.0, 1.0, 1.0),
    ("rsu4_skip_too_far", RSU4, "a x1 x2 x3 x4 b", ["a b"], A, 0.1, 2 / 3, 4 / 23),
    ("rsu4_empty", RSU4, "", ["a b"], A, 0.0, 0.0, 0.0),
    ("rsu4_swapped", RSU4, "a b", ["b a"], A, 2 / 3, 2 / 3, 2 / 3),
    ("rsu4_subseq", RSU4, "a b c", ["a c"], A, 0.5, 1.0, 2 / 3),
    ("rsu4_distance_four", RSU4, "a b c d e f", ["a e"], A, 3 / 20, 1.0, 6 / 23),
    ("rsu4_single", RSU4, "a", ["a"], A, 1.0, 1.0, 1.0),
    ("rw_identical", RW, "a b c", ["a b c"], A, 1.0, 1.0, 1.0),
    ("rw_disjoint", RW, "a b", ["c d"], A, 0.0, 0.0, 0.0),
    ("rw_single_match", RW, "x a y", ["p a"], A, 1 / 3, 0.5, 0.4),
    ("r1_jackknife", R1, "a b", ["a b", "a c", "b d"], J, 5 / 6, 5 / 6, 5 / 6),
]


@pytest.mark.parametrize(
    "label,metric,cand,refs,mode,p,r,f1",
    FIXED_CASES,
    ids=[case[0] for case in FIXED_CASES],
)
def test_fixed_micro_cases(label, metric, cand, refs, mode, p, r, f1):
    scores = compute_rouge(
        cand.split(),
        [ref.split() for ref in refs],
        metrics=[metric],
        aggregate=mode,
    )
    got = scores[metric]
    assert got.precision == pytest.approx(p, abs=1e-12)
    assert got.recall == pytest.approx(r, abs=1e-12)
    assert got.f1 == pytest.approx(f1, abs=1e-12)


class TestRougeW:
    def test_run_plus_singleton_example(self):
        # WLCS([a,b,c,d], [a,b,d]) = 2^1.2 + 1: run "ab" plus isolated "d".
        wlcs = 2 ** 1.2 + 1
        p = (wlcs / 4 ** 1.2) ** (1 / 1.2)
        r = (wlcs / 3 ** 1.2) ** (1 / 1.2)
        got = rouge_w("a b c d".split(), ["a b d".split()])
        assert got.precision == pytest.approx(p)
        assert got.recall == pytest.approx(r)
        assert got.f1 == pytest.approx(2 * p * r / (p + r))

    def test_consecutive_runs_beat_scattered(self):
        cand = "a b".split()
        tight = rouge_w(cand, ["a b".split()])
        loose = rouge_w(cand, ["a x b".split()])
        assert tight.f1 > loose.f1

    def test_weight_must_exceed_one(self):
        with pytest.raises(ValueError):
            rouge_w(["a"], [["a"]], weight=1.0)

    def test_exhaustive_subsequence_oracle(self):
        def oracle(x, y, w):
            def f(k):
                return k ** w

            best = 0.0

            def rec(pi, pj, run, total):
                nonlocal best
                best = max(best, total + f(run))
                for i in range(pi + 1, len(x)):
                    for j in range(pj + 1, len(y)):
                        if x[i] == y[j]:
                            if i == pi + 1 and j == pj + 1:
                                rec(i, j, run + 1, total)
                            else:
                                rec(i, j, 1, total + f(run))

            for i in range(len(x)):
                for j in range(len(y)):
                    if x[i] == y[j]:
                        rec(i, j, 1, 0.0)
            return best

        rng = random.Random(20260814)
        alphabet = "abc"
        for _ in range(200):
            nx = rng.randint(0, 8)
            ny = rng.randint(0, 8)
            x = [rng.choice(alphabet) for _ in range(nx)]
            y = [rng.choice(alphabet) for _ in range(ny)]
            assert _wlcs(x, y, 1.2) == pytest.approx(oracle(x, y, 1.2), abs=1e-12)


class TestProperties:
    @pytest.mark.parametrize("metric", ALL_METRICS)
    def test_identity(self, metric):
        # Length >= 2 so every metric has at least one counting unit.
        rng = random.Random(7)
        for _ in range(10):
            tokens = [rng.choice("abcdef") for _ in range(rng.randint(2, 12))]
            score = compute_rouge(tokens, [tokens], metrics=[metric])[metric]
            assert score == Score(1.0, 1.0, 1.0)

    def test_single_token_identity_convention(self):
        # A lone token has no bigram, so R2 is 0 by the zero-denominator rule;
        # the other metrics still see a perfect match.
        scores = compute_rouge(["a"], [["a"]])
        assert scores[R1] == Score(1.0, 1.0, 1.0)
        assert scores[RSU4] == Score(1.0, 1.0, 1.0)
        assert scores[RW] == pytest.approx(Score(1.0, 1.0, 1.0))
        assert scores[R2] == Score(0.0, 0.0, 0.0)

    @pytest.mark.parametrize("mode", [A, M, J])
    def test_reference_permutation_invariance(self, mode):
        rng = random.Random(11)
        cand = [rng.choice("abcd") for _ in range(10)]
        refs = [
            [rng.choice("abcd") for _ in range(rng.randint(2, 10))] for _ in range(4)
        ]
        shuffled = refs[::-1]
        for metric in ALL_METRICS:
            first = compute_rouge(cand, refs, metrics=[metric], aggregate=mode)[metric]
            second = compute_rouge(cand, shuffled, metrics=[metric], aggregate=mode)[
                metric
            ]
            assert first == pytest.approx(second)

    def test_r1_bag_intersection_oracle(self):
        rng = random.Random(13)
        for _ in range(50):
            cand = [rng.choice("abcde") for _ in range(rng.randint(0, 30))]
            ref = [rng.choice("abcde") for _ in range(rng.randint(1, 30))]
            got = rouge_n(cand, [ref], 1)
            overlap = sum((Counter(cand) & Counter(ref)).values())
            p = overlap / len(cand) if cand else 0.0
            r = overlap / len(ref)
            f1 = 2 * p * r / (p + r) if p + r else 0.0
            assert got == pytest.approx(Score(p, r, f1))

    def test_scores_bounded(self):
        rng = random.Random(17)
        for _ in range(20):
            cand = [rng.choice("ab") for _ in range(rng.randint(0, 15))]
            refs = [
                [rng.choice("ab") for _ in range(rng.randint(0, 15))]
                for _ in range(rng.randint(1, 3))
            ]
            for metric, score in compute_rouge(cand, refs).items():
                for value in score:
                    assert 0.0 <= value <= 1.0 + 1e-12

    def test_jackknife_single_reference_is_plain_score(self):
        cand = "a b c".split()
        ref = ["a c".split()]
        for metric in ALL_METRICS:
            plain = compute_rouge(cand, ref, metrics=[metric], aggregate=A)[metric]
            jack = compute_rouge(cand, ref, metrics=[metric], aggregate=J)[metric]
            assert plain == pytest.approx(jack)

    def test_no_references(self):
        assert rouge_n(["a"], [], 1) == Score(0.0, 0.0, 0.0)
        assert rouge_su4(["a"], []) == Score(0.0, 0.0, 0.0)
        assert rouge_w(["a"], []) == Score(0.0, 0.0, 0.0)


class TestTokenize:
    def test_lowercase_strip_stem(self):
        assert rouge_tokenize("The Cats sat!") == ["the", "cat", "sat"]

    def test_stop_words_retained(self):
        tokens = rouge_tokenize("The bridge of the city")
        assert tokens[0] == "the"
        assert "of" in tokens

    def test_punctuation_only_tokens_dropped(self):
        assert rouge_tokenize("--- ... (!)") == []

    def test_curly_quotes_stripped(self):
        assert rouge_tokenize("“bridges”") == ["bridg"]

    def test_evaluate_summary_end_to_end(self):
        scores = evaluate_summary("The cat sat.", ["The cat."])
        assert scores[R1] == pytest.approx(Score(2 / 3, 1.0, 0.8))
        assert set(scores) == set(ALL_METRICS)


class TestValidation:
    def test_bad_n(self):
        with pytest.raises(ValueError):
            rouge_n(["a"], [["a"]], 3)

    def test_unknown_metric(self):
        with pytest.raises(ValueError):
            compute_rouge(["a"], [["a"]], metrics=["r9"])

    def test_unknown_aggregate(self):
        with pytest.raises(ValueError):
            rouge_n(["a"], [["a"]], 1, aggregate="best")
