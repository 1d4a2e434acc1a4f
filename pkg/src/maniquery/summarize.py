"""Greedy de-redundant sentence selection under a word budget.

Sentences are picked in descending score order; after each pick the scores
of the remaining sentences are penalized in proportion to their similarity
with the picked one, which suppresses near-duplicates.  Selection never
includes the query row and the emitted text never exceeds the word budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .corpus import QUERY_DOC_ID, Sentence
from .errors import DimensionMismatchError, EmptyRankingError
from .ranking import RankVector
from .simgraph import SimilarityGraph
from .validation import check_square, check_vector

DEFAULT_PENALTY = 8.0
DEFAULT_BUDGET = 250


@dataclass(frozen=True)
class PickRecord:
    """One selection step: who was picked, at what score, who got penalized."""

    index: int
    score_at_pick: float
    penalties: tuple[tuple[int, float], ...]


@dataclass(frozen=True)
class Summary:
    """Extractive summary in pick order.

    ``selected`` holds global sentence indices (never the query row).
    ``text`` has one sentence per line; when ``truncated`` is set the last
    line was hard-cut so that ``word_count`` equals the budget.
    """

    selected: tuple[int, ...]
    text: str
    word_count: int
    truncated: bool
    trace: tuple[PickRecord, ...] = ()


def extract_summary(
    f: Union[RankVector, np.ndarray],
    graph: Union[SimilarityGraph, np.ndarray],
    sentences: Sequence[Sentence],
    redundancy_penalty: float = DEFAULT_PENALTY,
    budget: int = DEFAULT_BUDGET,
) -> Summary:
    """Select document sentences greedily with a redundancy penalty.

    Repeatedly picks the highest-scoring unselected document sentence (ties
    go to the lower index) and then lowers every remaining score j by
    ``redundancy_penalty * S_hat[j, k] * score_k``, where ``S_hat`` is the
    row-normalized document-sentence block of the graph.  Sentences whose
    penalized score has dropped to zero or below wait until no positive
    candidate remains.  Selection stops when the next pick would exceed
    ``budget``; if the very first pick alone exceeds it, that sentence is
    hard-truncated to exactly ``budget`` words.
    """
    if redundancy_penalty < 0:
        raise ValueError("redundancy_penalty must be non-negative")
    if budget <= 0:
        raise ValueError("budget must be positive")
    W = graph.W if isinstance(graph, SimilarityGraph) else check_square(graph, "W")
    n = W.shape[0]
    if len(sentences) != n:
        raise DimensionMismatchError(
            f"graph has {n} rows but {len(sentences)} sentences were given"
        )
    scores = f.scores if isinstance(f, RankVector) else np.asarray(f, dtype=float)
    scores = check_vector(scores, n, "f")

    doc_indices = [
        i for i, s in enumerate(sentences) if s.doc_id != QUERY_DOC_ID
    ]
    if not doc_indices:
        raise EmptyRankingError("no document sentences to select from")

    sub = W[np.ix_(doc_indices, doc_indices)]
    row_sums = sub.sum(axis=1, keepdims=True)
    S_hat = np.divide(sub, row_sums, out=np.zeros_like(sub), where=row_sums > 0)

    working = scores[doc_indices].astype(float).copy()
    unselected = list(range(len(doc_indices)))
    picks: list[int] = []
    lines: list[str] = []
    trace: list[PickRecord] = []
    total_words = 0
    truncated = False

    while unselected:
        positive = [j for j in unselected if working[j] > 0.0]
        pool = positive if positive else unselected
        best = max(pool, key=lambda j: (working[j], -j))

        sentence = sentences[doc_indices[best]]
        cost = sentence.word_count
        if total_words + cost > budget:
            if picks:
                break
            words = sentence.raw_text.split()[:budget]
            lines.append(" ".join(words))
            total_words = budget
            truncated = True
            picks.append(best)
            trace.append(PickRecord(doc_indices[best], float(working[best]), ()))
            break

        pick_score = float(working[best])
        picks.append(best)
        lines.append(sentence.raw_text)
        total_words += cost
        unselected.remove(best)

        penalties = []
        for j in unselected:
            amount = redundancy_penalty * S_hat[j, best] * pick_score
            if amount != 0.0:
                working[j] -= amount
                penalties.append((doc_indices[j], float(amount)))
        trace.append(PickRecord(doc_indices[best], pick_score, tuple(penalties)))

    return Summary(
        selected=tuple(doc_indices[j] for j in picks),
        text="\n".join(lines),
        word_count=total_words,
        truncated=truncated,
        trace=tuple(trace),
    )
