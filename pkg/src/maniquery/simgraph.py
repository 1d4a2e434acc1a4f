"""Sentence similarity graph used by the ranking stage.

The graph blends three symmetric signals between sentence rows: cosine
similarity over the expanded term matrix, distinct-stem overlap over the
original token sets, and an intra-document positional proximity that decays
geometrically with sentence distance.  The query row participates in the
cosine and overlap terms but has zero proximity to every other row.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np
from sklearn.preprocessing import normalize

from .corpus import QUERY_DOC_ID, Sentence
from .errors import DimensionMismatchError
from .validation import as_dense_float

PROXIMITY_DECAY = 0.1


class GraphWeights(NamedTuple):
    """Mixing weights for the three similarity terms."""

    alpha_cos: float = 0.9
    alpha_overlap: float = 0.1
    alpha_peer: float = 0.4


@dataclass(frozen=True)
class SimilarityGraph:
    """Weighted undirected sentence graph.

    ``W`` is exactly symmetric with a zero diagonal.  ``D`` holds the row
    sums of ``W`` (degrees), ``SS`` the raw overlap matrix, and ``P`` the raw
    proximity matrix, both kept for inspection and debug dumps.
    """

    n: int
    W: np.ndarray
    D: np.ndarray
    SS: np.ndarray
    P: np.ndarray
    weights: GraphWeights


def word_overlap(s1: Sentence, s2: Sentence) -> float:
    """Distinct-stem overlap |S1 & S2| / min(|S1|, |S2|).

    Operates on the original (pre-expansion) token sets.  Returns 0.0 when
    either sentence has no content terms.
    """
    stems1 = set(s1.stems)
    stems2 = set(s2.stems)
    if not stems1 or not stems2:
        return 0.0
    return len(stems1 & stems2) / min(len(stems1), len(stems2))


def proximity(s1: Sentence, s2: Sentence) -> float:
    """Positional proximity 0.1^|pos1 - pos2| for distinct same-document rows.

    Cross-document pairs, any pair involving the query row, and a sentence
    paired with itself all score 0.0.
    """
    if s1.doc_id == QUERY_DOC_ID or s2.doc_id == QUERY_DOC_ID:
        return 0.0
    if s1.doc_id != s2.doc_id:
        return 0.0
    if s1.position_in_doc == s2.position_in_doc:
        return 0.0
    return PROXIMITY_DECAY ** abs(s1.position_in_doc - s2.position_in_doc)


def cosine_matrix(X) -> np.ndarray:
    """Pairwise cosine similarity over matrix rows; zero rows stay zero."""
    dense = as_dense_float(X, "X")
    unit = normalize(dense, norm="l2", copy=True)
    return unit @ unit.T


def _pairwise(sentences: Sequence[Sentence], func) -> np.ndarray:
    n = len(sentences)
    out = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            value = func(sentences[i], sentences[j])
            out[i, j] = value
            out[j, i] = value
    return out


def build_graph(
    A1,
    sentences: Sequence[Sentence],
    weights: GraphWeights = GraphWeights(),
    A0=None,
) -> SimilarityGraph:
    """Assemble the blended sentence graph.

    ``A1`` is the row-expanded term matrix whose row order matches
    ``sentences`` (query row first).  The overlap and proximity terms come
    from the sentence objects themselves, so they always reflect the original
    text regardless of expansion.  When ``A0`` (the pre-expansion matrix) is
    supplied, the two matrices must agree on every row but the first; this
    guards against passing matrices from different topics.
    """
    dense = as_dense_float(A1, "A1")
    n = dense.shape[0]
    if n != len(sentences):
        raise DimensionMismatchError(
            f"matrix has {n} rows but {len(sentences)} sentences were given"
        )
    if A0 is not None:
        original = as_dense_float(A0, "A0")
        if original.shape != dense.shape:
            raise DimensionMismatchError(
                f"A0 shape {original.shape} does not match A1 shape {dense.shape}"
            )
        if n > 1 and not np.array_equal(original[1:], dense[1:]):
            raise ValueError("A0 and A1 must be identical outside the query row")
    weights = GraphWeights(*(float(w) for w in weights))
    if any(w < 0 for w in weights):
        raise ValueError("graph weights must be non-negative")

    cos = cosine_matrix(dense)
    overlap = _pairwise(sentences, word_overlap)
    prox = _pairwise(sentences, proximity)

    blended = (
        weights.alpha_cos * cos
        + weights.alpha_overlap * overlap
        + weights.alpha_peer * prox
    )
    # Mirror the upper triangle so W == W.T holds exactly despite any
    # floating-point asymmetry in the cosine product.
    upper = np.triu(blended, k=1)
    W = upper + upper.T
    return SimilarityGraph(
        n=n,
        W=W,
        D=W.sum(axis=1),
        SS=overlap,
        P=prox,
        weights=weights,
    )
