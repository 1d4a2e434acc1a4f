"""Score propagation over sentence graphs.

Two solvers live here.  ``manifold_rank`` spreads query affinity over the
symmetrically normalized sentence graph until a fixed point; it is the
scoring engine behind summary extraction.  ``textrank_scores`` runs a biased
PageRank over a row-normalized document-sentence graph and feeds the query
expansion stage.  Both return a :class:`RankVector` and have thin
scikit-learn style estimator wrappers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError

from .errors import InvalidAlphaError, NonConvergenceError
from .simgraph import SimilarityGraph
from .validation import check_nonnegative, check_square, check_unit_interval, check_vector

MANIFOLD = "manifold"
TEXTRANK = "textrank"

DEFAULT_TOL = 1e-9
DEFAULT_MAX_ITER = 10_000


@dataclass(frozen=True)
class RankVector:
    """Result of a ranking solve.

    ``kind`` is :data:`MANIFOLD` or :data:`TEXTRANK`.  Manifold scores are
    finite and non-negative; textrank scores form a probability distribution.
    ``iterations_used`` is 0 when the closed-form path was taken.
    """

    scores: np.ndarray
    kind: str
    iterations_used: int
    converged: bool


def _symmetric_normalize(W: np.ndarray, D: np.ndarray) -> np.ndarray:
    """S = D^(-1/2) W D^(-1/2); rows with zero degree stay zero."""
    with np.errstate(divide="ignore"):
        inv_sqrt = np.where(D > 0, 1.0 / np.sqrt(np.where(D > 0, D, 1.0)), 0.0)
    return W * inv_sqrt[:, None] * inv_sqrt[None, :]


def manifold_rank(
    graph: Union[SimilarityGraph, np.ndarray],
    y,
    alpha_mr: float = 0.6,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    method: str = "iterate",
) -> RankVector:
    """Solve f = alpha_mr * S f + (1 - alpha_mr) * y on the sentence graph.

    ``graph`` may be a :class:`SimilarityGraph` or a raw symmetric
    non-negative weight matrix.  ``y`` is the query-affinity vector (1 at
    query rows, 0 elsewhere).  ``method`` selects the power iteration
    (``"iterate"``) or the closed form (``"direct"``); the two agree to
    within the iteration tolerance.

    Rows with zero degree receive exactly (1 - alpha_mr) * y_i: they take
    their prior and propagate nothing.

    Raises :class:`InvalidAlphaError` when alpha_mr is outside (0, 1) and
    :class:`NonConvergenceError` when the iteration fails to settle.
    """
    if not 0.0 < float(alpha_mr) < 1.0:
        raise InvalidAlphaError(alpha_mr)
    if isinstance(graph, SimilarityGraph):
        W, D = graph.W, graph.D
    else:
        W = check_square(graph, "W")
        D = W.sum(axis=1)
    check_nonnegative(W, "W")
    y = check_vector(y, W.shape[0], "y")
    check_nonnegative(y, "y")

    S = _symmetric_normalize(W, D)
    base = (1.0 - alpha_mr) * y

    if method == "direct":
        n = S.shape[0]
        f = np.linalg.solve(np.eye(n) - alpha_mr * S, base)
        return RankVector(np.maximum(f, 0.0), MANIFOLD, 0, True)
    if method != "iterate":
        raise ValueError(f"unknown method {method!r}")

    f = y.astype(float).copy()
    delta = float("inf")
    for iteration in range(1, int(max_iter) + 1):
        f_next = alpha_mr * (S @ f) + base
        delta = float(np.max(np.abs(f_next - f)))
        f = f_next
        if delta < tol:
            return RankVector(np.maximum(f, 0.0), MANIFOLD, iteration, True)
    raise NonConvergenceError(
        f"manifold ranking did not converge within {max_iter} iterations "
        f"(last update {delta:.3e}, tol {tol:.3e})"
    )


def textrank_scores(
    W_docs,
    query_rel,
    damping: float = 0.6,
    r_t: float = 0.4,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> RankVector:
    """Biased PageRank over a document-sentence similarity matrix.

    The transition matrix row-normalizes ``W_docs``; rows with no outgoing
    weight hand their mass to the teleport vector.  The teleport vector
    blends the normalized ``query_rel`` bias (weight ``r_t``) with the
    uniform distribution (weight ``1 - r_t``); an all-zero ``query_rel``
    degrades to a uniform teleport.

    Never raises on slow convergence: after ``max_iter`` sweeps the last
    iterate is returned with ``converged=False``.
    """
    if not 0.0 < float(damping) < 1.0:
        raise InvalidAlphaError(damping)
    r_t = check_unit_interval(r_t, "r_t", open_ends=False)
    W = check_square(W_docs, "W_docs")
    check_nonnegative(W, "W_docs")
    n = W.shape[0]
    if n == 0:
        raise ValueError("W_docs must have at least one row")
    rel = check_vector(query_rel, n, "query_rel")
    check_nonnegative(rel, "query_rel")

    degrees = W.sum(axis=1)
    dangling = degrees == 0.0
    M = np.divide(W, degrees[:, None], out=np.zeros_like(W), where=~dangling[:, None])

    uniform = np.full(n, 1.0 / n)
    total_rel = rel.sum()
    bias = rel / total_rel if total_rel > 0 else uniform
    v = r_t * bias + (1.0 - r_t) * uniform

    p = uniform.copy()
    converged = False
    iterations = 0
    for iterations in range(1, int(max_iter) + 1):
        spread = M.T @ p + v * p[dangling].sum()
        p_next = damping * spread + (1.0 - damping) * v
        p_next /= p_next.sum()
        delta = float(np.max(np.abs(p_next - p)))
        p = p_next
        if delta < tol:
            converged = True
            break
    return RankVector(p, TEXTRANK, iterations, converged)


class ManifoldRanker(BaseEstimator):
    """Estimator wrapper around :func:`manifold_rank`.

    ``fit(X, y)`` takes the sentence graph (a :class:`SimilarityGraph` or a
    symmetric weight matrix) and the query-affinity vector, then exposes
    ``scores_``, ``iterations_`` and ``converged_``.
    """

    def __init__(
        self,
        alpha_mr: float = 0.6,
        tol: float = DEFAULT_TOL,
        max_iter: int = DEFAULT_MAX_ITER,
        method: str = "iterate",
    ):
        self.alpha_mr = alpha_mr
        self.tol = tol
        self.max_iter = max_iter
        self.method = method

    def fit(self, X, y):
        result = manifold_rank(
            X,
            y,
            alpha_mr=self.alpha_mr,
            tol=self.tol,
            max_iter=self.max_iter,
            method=self.method,
        )
        self.scores_ = result.scores
        self.iterations_ = result.iterations_used
        self.converged_ = result.converged
        return self

    def predict(self, X=None) -> np.ndarray:
        if not hasattr(self, "scores_"):
            raise NotFittedError("ManifoldRanker must be fitted before predict")
        return self.scores_


class BiasedTextRank(BaseEstimator):
    """Estimator wrapper around :func:`textrank_scores`."""

    def __init__(
        self,
        damping: float = 0.6,
        r_t: float = 0.4,
        tol: float = DEFAULT_TOL,
        max_iter: int = DEFAULT_MAX_ITER,
    ):
        self.damping = damping
        self.r_t = r_t
        self.tol = tol
        self.max_iter = max_iter

    def fit(self, X, y):
        result = textrank_scores(
            X,
            y,
            damping=self.damping,
            r_t=self.r_t,
            tol=self.tol,
            max_iter=self.max_iter,
        )
        self.scores_ = result.scores
        self.iterations_ = result.iterations_used
        self.converged_ = result.converged
        return self

    def predict(self, X=None) -> np.ndarray:
        if not hasattr(self, "scores_"):
            raise NotFittedError("BiasedTextRank must be fitted before predict")
        return self.scores_
