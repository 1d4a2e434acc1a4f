"""Query expansion: rewrite the query row of the term matrix.

Four mechanisms contribute to the expanded query vector: lexical spreading
through the word-similarity matrix, per-word corpus means, per-word corpus
variances, and a binary indicator of the top TextRank words.  The combined
vector replaces row 0 of a copy of the sentence-word matrix; document rows
are never touched.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Mapping, Optional, Union

import numpy as np
from scipy import sparse
from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError

from .corpus import SentenceWordMatrix
from .errors import DimensionMismatchError, EmptyTopicError, TooFewRowsError
from .ranking import RankVector
from .validation import check_vector
from .wordnet import WordSimMatrix

SIM_WORD = "simword"
MEAN = "mean"
VARIANCE = "variance"
TEXTRANK_WORDS = "textrank"
ALL_EXPANSIONS = frozenset({SIM_WORD, MEAN, VARIANCE, TEXTRANK_WORDS})


@dataclass(frozen=True)
class ExpansionConfig:
    """Weights and switches for the expansion mechanisms."""

    theta_mean: float = 1.0
    theta_var: float = 1.0
    theta_rank: float = 1.0
    c_words: int = 100
    enabled: frozenset = ALL_EXPANSIONS

    def __post_init__(self):
        for name in ("theta_mean", "theta_var", "theta_rank"):
            value = float(getattr(self, name))
            if not np.isfinite(value) or value < 0:
                raise ValueError(f"{name} must be a finite non-negative number")
        if int(self.c_words) < 0:
            raise ValueError("c_words must be non-negative")
        object.__setattr__(self, "c_words", int(self.c_words))
        unknown = frozenset(self.enabled) - ALL_EXPANSIONS
        if unknown:
            raise ValueError(f"unknown expansion names: {sorted(unknown)}")
        object.__setattr__(self, "enabled", frozenset(self.enabled))


@dataclass(frozen=True)
class ExpandedQuery:
    """Combined query vector plus the per-mechanism component vectors."""

    values: np.ndarray
    provenance: Mapping[str, np.ndarray] = field(default_factory=dict)


def _doc_rows(matrix: SentenceWordMatrix) -> sparse.csr_matrix:
    keep = [i for i in range(matrix.rows) if i not in matrix.query_rows]
    return matrix.matrix[keep]


def expand_simword(T0, sim: Union[WordSimMatrix, sparse.spmatrix, np.ndarray]) -> np.ndarray:
    """Spread query weight through word similarity: out_i = max_j T0_j * sim(j, i).

    The similarity matrix carries an implicit unit diagonal, so every output
    entry is at least its input entry.  Accepts a :class:`WordSimMatrix` or a
    raw square matrix holding the off-diagonal similarities.
    """
    raw = sim.matrix if isinstance(sim, WordSimMatrix) else sim
    coo = sparse.coo_matrix(raw)
    if coo.shape[0] != coo.shape[1]:
        raise DimensionMismatchError(f"similarity matrix must be square, got {coo.shape}")
    T0 = check_vector(T0, coo.shape[0], "T0")
    out = T0.copy()
    np.maximum.at(out, coo.col, T0[coo.row] * coo.data)
    return out


def expand_mean(X) -> np.ndarray:
    """Column means over the document rows."""
    X = sparse.csr_matrix(X)
    if X.shape[0] < 1:
        raise EmptyTopicError("mean expansion needs at least one document row")
    return np.asarray(X.mean(axis=0)).ravel()


def expand_variance(X) -> np.ndarray:
    """Per-column sample variance (denominator N_d - 1) over document rows."""
    X = sparse.csr_matrix(X)
    if X.shape[0] < 2:
        raise TooFewRowsError(
            f"variance expansion needs at least 2 document rows, got {X.shape[0]}"
        )
    return np.var(X.toarray(), axis=0, ddof=1)


def expand_textrank(
    matrix: SentenceWordMatrix,
    p_star: Union[RankVector, np.ndarray],
    c_words: int,
) -> np.ndarray:
    """Binary indicator of the top-``c_words`` words under TextRank weighting.

    Projects the sentence scores onto words through the row-normalized
    document rows (S = D^-1 X, y = S^T p*), then marks the ``c_words``
    highest-scoring words.  Ties break by vocabulary order and words with a
    zero score are never selected, so the indicator may have fewer than
    ``c_words`` ones.
    """
    if c_words < 0:
        raise ValueError("c_words must be non-negative")
    scores = p_star.scores if isinstance(p_star, RankVector) else np.asarray(p_star, float)
    docs = _doc_rows(matrix).toarray()
    if scores.shape[0] != docs.shape[0]:
        raise DimensionMismatchError(
            f"p_star has {scores.shape[0]} scores for {docs.shape[0]} document rows"
        )
    row_sums = docs.sum(axis=1, keepdims=True)
    S = np.divide(docs, row_sums, out=np.zeros_like(docs), where=row_sums > 0)
    y = S.T @ scores

    out = np.zeros(matrix.cols)
    order = np.argsort(-y, kind="stable")
    picked = 0
    for idx in order:
        if picked >= c_words or y[idx] <= 0.0:
            break
        out[idx] = 1.0
        picked += 1
    return out


def combine_expansions(
    T0,
    components: Mapping[str, np.ndarray],
    config: ExpansionConfig = ExpansionConfig(),
) -> ExpandedQuery:
    """Blend the enabled component vectors into the expanded query.

    The lexical term replaces T0 as the base when enabled (it dominates T0
    entrywise); the mean, variance and TextRank terms are added with their
    respective weights.  Disabled mechanisms contribute nothing.
    """
    T0 = np.asarray(T0, dtype=float).ravel()
    m = T0.shape[0]

    def component(name: str) -> np.ndarray:
        if name not in components:
            raise ValueError(f"expansion {name!r} is enabled but was not computed")
        return check_vector(components[name], m, name)

    if SIM_WORD in config.enabled:
        total = component(SIM_WORD).copy()
    else:
        total = T0.copy()
    weighted = (
        (MEAN, config.theta_mean),
        (VARIANCE, config.theta_var),
        (TEXTRANK_WORDS, config.theta_rank),
    )
    provenance = {}
    if SIM_WORD in config.enabled:
        provenance[SIM_WORD] = np.asarray(components[SIM_WORD], dtype=float)
    for name, weight in weighted:
        if name in config.enabled:
            vector = component(name)
            total += weight * vector
            provenance[name] = vector
    return ExpandedQuery(values=total, provenance=provenance)


def expand_query(
    matrix: SentenceWordMatrix,
    config: ExpansionConfig = ExpansionConfig(),
    sim: Optional[WordSimMatrix] = None,
    p_star: Optional[Union[RankVector, np.ndarray]] = None,
) -> ExpandedQuery:
    """Compute every enabled component for a topic and combine them.

    ``sim`` is required when the lexical mechanism is enabled, ``p_star``
    when the TextRank mechanism is.  A topic with a single document row
    cannot support a sample variance; the variance term then contributes
    zero and a warning is emitted.
    """
    T0 = np.asarray(matrix.matrix[0].todense()).ravel()
    components: dict[str, np.ndarray] = {}
    if SIM_WORD in config.enabled:
        if sim is None:
            raise ValueError("lexical expansion is enabled but no similarity matrix given")
        components[SIM_WORD] = expand_simword(T0, sim)
    docs = _doc_rows(matrix)
    if MEAN in config.enabled:
        components[MEAN] = expand_mean(docs)
    if VARIANCE in config.enabled:
        try:
            components[VARIANCE] = expand_variance(docs)
        except TooFewRowsError as exc:
            warnings.warn(f"{exc}; variance term set to zero", stacklevel=2)
            components[VARIANCE] = np.zeros(matrix.cols)
    if TEXTRANK_WORDS in config.enabled:
        if p_star is None:
            raise ValueError("TextRank expansion is enabled but no sentence scores given")
        components[TEXTRANK_WORDS] = expand_textrank(matrix, p_star, config.c_words)
    return combine_expansions(T0, components, config)


def replace_query_row(matrix: SentenceWordMatrix, values) -> sparse.csr_matrix:
    """Return a copy of the term matrix with row 0 swapped for ``values``."""
    values = check_vector(values, matrix.cols, "values")
    out = matrix.matrix.tolil(copy=True)
    out[0] = values
    return out.tocsr()


class QueryExpander(BaseEstimator):
    """Transformer that rewrites the query row of a sentence-word matrix.

    ``fit`` computes the expanded query for a :class:`SentenceWordMatrix`
    (pass ``sim`` and/or ``p_star`` as fit parameters when those mechanisms
    are enabled); ``transform`` returns the matrix with row 0 replaced.
    Fitted attributes: ``expanded_`` (values plus provenance) and
    ``matrix_`` (the rewritten CSR matrix).
    """

    def __init__(
        self,
        theta_mean: float = 1.0,
        theta_var: float = 1.0,
        theta_rank: float = 1.0,
        c_words: int = 100,
        expansions: tuple = tuple(sorted(ALL_EXPANSIONS)),
    ):
        self.theta_mean = theta_mean
        self.theta_var = theta_var
        self.theta_rank = theta_rank
        self.c_words = c_words
        self.expansions = expansions

    def _config(self) -> ExpansionConfig:
        return ExpansionConfig(
            theta_mean=self.theta_mean,
            theta_var=self.theta_var,
            theta_rank=self.theta_rank,
            c_words=self.c_words,
            enabled=frozenset(self.expansions),
        )

    def fit(self, X: SentenceWordMatrix, y=None, sim=None, p_star=None):
        self.expanded_ = expand_query(X, self._config(), sim=sim, p_star=p_star)
        self.matrix_ = replace_query_row(X, self.expanded_.values)
        return self

    def transform(self, X=None) -> sparse.csr_matrix:
        if not hasattr(self, "matrix_"):
            raise NotFittedError("QueryExpander must be fitted before transform")
        return self.matrix_

    def fit_transform(self, X: SentenceWordMatrix, y=None, **fit_params) -> sparse.csr_matrix:
        return self.fit(X, y, **fit_params).transform()
