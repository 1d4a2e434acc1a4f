"""Tests for greedy de-redundant summary extraction."""

import numpy as np
import pytest

from maniquery.corpus import QUERY_DOC_ID, Sentence, Term
from maniquery.errors import DimensionMismatchError, EmptyRankingError
from maniquery.ranking import MANIFOLD, RankVector
from maniquery.simgraph import GraphWeights, SimilarityGraph
from maniquery.summarize import PickRecord, Summary, extract_summary


def sent(doc_id: str, pos: int, words, index: int = 0) -> Sentence:
    tokens = tuple(
        Term(stem=w.lower(), lemma=w.lower(), pos_tags=frozenset({"noun"}))
        for w in words
    )
    return Sentence(
        topic_local_index=index,
        doc_id=doc_id,
        position_in_doc=pos,
        raw_text=" ".join(words),
        tokens=tokens,
        word_count=len(words),
    )


def make_rows(word_counts, with_query=True):
    """Query row first (when requested), then one doc sentence per count."""
    rows = []
    if with_query:
        rows.append(sent(QUERY_DOC_ID, 0, ["query", "words"], 0))
    for i, count in enumerate(word_counts):
        words = [f"s{i}w{k}" for k in range(count)]
        rows.append(sent("d1", i, words, len(rows)))
    return rows


def replay_oracle(scores, W, sentences, omega, budget):
    """Independent replay of the penalty recurrence with plain Python."""
    doc = [i for i, s in enumerate(sentences) if s.doc_id != QUERY_DOC_ID]
    sub = [[float(W[a][b]) for b in doc] for a in doc]
    sums = [sum(row) for row in sub]
    S = [
        [sub[i][j] / sums[i] if sums[i] > 0 else 0.0 for j in range(len(doc))]
        for i in range(len(doc))
    ]
    work = [float(scores[i]) for i in doc]
    unsel = list(range(len(doc)))
    picks, pick_scores, total, truncated = [], [], 0, False
    while unsel:
        pool = [j for j in unsel if work[j] > 0] or unsel
        best = sorted(pool, key=lambda j: (-work[j], j))[0]
        cost = sentences[doc[best]].word_count
        if total + cost > budget:
            if picks:
                break
            picks.append(doc[best])
            pick_scores.append(work[best])
            total = budget
            truncated = True
            break
        picks.append(doc[best])
        pick_scores.append(work[best])
        total += cost
        unsel.remove(best)
        for j in unsel:
            work[j] -= omega * S[j][best] * pick_scores[-1]
    return picks, pick_scores, total, truncated


class TestHandToy:
    W = np.array(
        [
            [0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.8, 0.2],
            [0.0, 0.8, 0.0, 0.4],
            [0.0, 0.2, 0.4, 0.0],
        ]
    )
    f = np.array([0.9, 0.5, 0.4, 0.3])

    def sentences(self):
        return make_rows([4, 4, 4])

    def test_selection_order_hand_derived(self):
        # After picking sentence 1 (score 0.5), penalties drive both others
        # negative; sentence 3 (-31/30) beats sentence 2 (-34/15); picking it
        # adds back 8 * (1/3) * its negative score, lifting sentence 2 to 22/45.
        summary = extract_summary(self.f, self.W, self.sentences(), 8.0, 1000)
        assert summary.selected == (1, 3, 2)
        picked_scores = [r.score_at_pick for r in summary.trace]
        assert picked_scores == pytest.approx([0.5, -31 / 30, 22 / 45])

    def test_matches_replay_oracle(self):
        sentences = self.sentences()
        for omega in (0.0, 1.0, 8.0, 20.0):
            for budget in (4, 8, 12, 1000):
                summary = extract_summary(self.f, self.W, sentences, omega, budget)
                picks, scores, total, truncated = replay_oracle(
                    self.f, self.W, sentences, omega, budget
                )
                assert list(summary.selected) == picks
                assert [r.score_at_pick for r in summary.trace] == pytest.approx(scores)
                assert summary.word_count == total
                assert summary.truncated == truncated


class TestNoPenalty:
    def test_pure_descending_order(self):
        rng = np.random.default_rng(2)
        counts = rng.integers(3, 9, size=6).tolist()
        sentences = make_rows(counts)
        scores = np.concatenate([[9.9], rng.random(6)])
        W = np.zeros((7, 7))
        summary = extract_summary(scores, W, sentences, 0.0, 1000)
        order = sorted(range(1, 7), key=lambda i: (-scores[i], i))
        assert list(summary.selected) == order

    def test_budget_prefix_packing(self):
        sentences = make_rows([10, 10, 10])
        scores = [0.0, 0.3, 0.2, 0.1]
        summary = extract_summary(scores, np.zeros((4, 4)), sentences, 0.0, 25)
        assert summary.selected == (1, 2)
        assert summary.word_count == 20
        assert not summary.truncated


class TestRedundancy:
    def build(self):
        # Sentences 1 and 2 are near-duplicates; 3 and 4 form their own pair.
        W = np.zeros((5, 5))
        pairs = {(1, 2): 1.0, (3, 4): 1.0, (1, 3): 0.01, (1, 4): 0.01,
                 (2, 3): 0.01, (2, 4): 0.01}
        for (a, b), w in pairs.items():
            W[a, b] = W[b, a] = w
        scores = np.array([0.0, 0.5, 0.49, 0.3, 0.2])
        return W, scores, make_rows([5, 5, 5, 5])

    def test_duplicate_picked_last_with_room(self):
        W, scores, sentences = self.build()
        summary = extract_summary(scores, W, sentences, 8.0, 1000)
        assert summary.selected[0] == 1
        assert summary.selected[1] == 3
        assert summary.selected[-1] == 2

    def test_duplicate_never_picked_under_budget(self):
        W, scores, sentences = self.build()
        summary = extract_summary(scores, W, sentences, 8.0, 10)
        assert 2 not in summary.selected
        assert summary.selected == (1, 3)


class TestBudget:
    def test_first_pick_truncated_to_budget(self):
        sentences = make_rows([12])
        summary = extract_summary([0.0, 1.0], np.zeros((2, 2)), sentences, 8.0, 5)
        assert summary.truncated
        assert summary.word_count == 5
        assert summary.selected == (1,)
        assert summary.text == "s0w0 s0w1 s0w2 s0w3 s0w4"

    def test_stop_without_truncation(self):
        sentences = make_rows([4, 10])
        scores = [0.0, 0.9, 0.8]
        summary = extract_summary(scores, np.zeros((3, 3)), sentences, 0.0, 8)
        assert summary.selected == (1,)
        assert summary.word_count == 4
        assert not summary.truncated

    def test_exact_fit_is_not_truncation(self):
        sentences = make_rows([4, 4])
        summary = extract_summary([0, 1.0, 0.9], np.zeros((3, 3)), sentences, 0.0, 8)
        assert summary.selected == (1, 2)
        assert summary.word_count == 8
        assert not summary.truncated


class TestInvariants:
    @pytest.mark.parametrize("seed", [1, 2, 3, 4])
    def test_budget_respected_and_deterministic(self, seed):
        rng = np.random.default_rng(seed)
        n = 8
        counts = rng.integers(3, 30, size=n).tolist()
        sentences = make_rows(counts)
        raw = rng.random((n + 1, n + 1))
        W = np.triu(raw, 1)
        W = W + W.T
        scores = np.concatenate([[1.0], rng.random(n)])
        for omega in (0.0, 2.0, 8.0):
            first = extract_summary(scores, W, sentences, omega, 25)
            second = extract_summary(scores, W, sentences, omega, 25)
            assert first == second
            assert first.word_count <= 25
            assert len(set(first.selected)) == len(first.selected)
            assert 0 not in first.selected
            picks, pick_scores, total, truncated = replay_oracle(
                scores, W, sentences, omega, 25
            )
            assert list(first.selected) == picks
            assert first.word_count == total

    def test_query_row_never_selected_even_with_top_score(self):
        sentences = make_rows([3, 3])
        scores = [99.0, 0.5, 0.4]
        summary = extract_summary(scores, np.zeros((3, 3)), sentences, 0.0, 100)
        assert summary.selected == (1, 2)

    def test_ties_prefer_lower_index(self):
        sentences = make_rows([3, 3, 3])
        scores = [0.0, 0.5, 0.5, 0.5]
        summary = extract_summary(scores, np.zeros((4, 4)), sentences, 0.0, 100)
        assert summary.selected == (1, 2, 3)

    def test_text_one_sentence_per_line(self):
        sentences = make_rows([3, 2])
        summary = extract_summary([0, 1.0, 0.9], np.zeros((3, 3)), sentences, 0.0, 100)
        lines = summary.text.split("\n")
        assert lines == [sentences[1].raw_text, sentences[2].raw_text]
        assert summary.word_count == len(summary.text.split())


class TestInterfaces:
    def test_accepts_rank_vector_and_graph(self):
        sentences = make_rows([3, 3])
        W = np.array([[0.0, 0.1, 0.1], [0.1, 0.0, 0.2], [0.1, 0.2, 0.0]])
        graph = SimilarityGraph(
            n=3, W=W, D=W.sum(axis=1), SS=np.zeros((3, 3)),
            P=np.zeros((3, 3)), weights=GraphWeights(),
        )
        rv = RankVector(np.array([0.9, 0.5, 0.4]), MANIFOLD, 10, True)
        from_objects = extract_summary(rv, graph, sentences)
        from_arrays = extract_summary(rv.scores, W, sentences)
        assert from_objects == from_arrays
        assert isinstance(from_objects, Summary)
        assert all(isinstance(r, PickRecord) for r in from_objects.trace)

    def test_no_document_sentences(self):
        query_only = [sent(QUERY_DOC_ID, 0, ["only", "query"], 0)]
        with pytest.raises(EmptyRankingError):
            extract_summary([1.0], np.zeros((1, 1)), query_only)

    def test_validation(self):
        sentences = make_rows([3])
        with pytest.raises(ValueError):
            extract_summary([0, 1.0], np.zeros((2, 2)), sentences, -1.0, 10)
        with pytest.raises(ValueError):
            extract_summary([0, 1.0], np.zeros((2, 2)), sentences, 8.0, 0)
        with pytest.raises(DimensionMismatchError):
            extract_summary([0, 1.0, 0.5], np.zeros((2, 2)), sentences)
        with pytest.raises(DimensionMismatchError):
            extract_summary([0, 1.0], np.zeros((3, 3)), sentences)
