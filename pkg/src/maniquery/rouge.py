"""ROUGE evaluation: R1, R2, weighted LCS, and skip-bigram-with-unigram.

Functions follow the sklearn.metrics convention: plain inputs, a named-tuple
score per call.  Candidates and references are token sequences; use
:func:`rouge_tokenize` to produce them from raw text (lowercase, punctuation
stripped from token edges, Porter-stemmed, stop words retained).

Multi-reference aggregation modes:

- ``average``: mean of per-reference precision/recall/F1 (default).
- ``micro``: pool numerators and denominators across references before
  forming ratios (for the weighted-LCS metric the pooled ratios pass through
  the inverse weighting function, which reduces to the single-reference
  definition when one reference is given).
- ``jackknife``: for k references, average over the k leave-one-out sets of
  the best-F1 reference score within each set; with one reference this is
  the plain single-reference score.
"""

from __future__ import annotations

import string
from collections import Counter
from typing import NamedTuple, Sequence

from .stemming import porter_stem

R1 = "r1"
R2 = "r2"
RW = "rw"
RSU4 = "rsu4"
ALL_METRICS = (R1, R2, RW, RSU4)

AGGREGATES = ("average", "micro", "jackknife")

DEFAULT_W_WEIGHT = 1.2
SKIP_DISTANCE = 4

_EDGE_CHARS = string.punctuation + "‘’“”–—…"


class Score(NamedTuple):
    """Precision, recall and balanced F-measure, each in [0, 1]."""

    precision: float
    recall: float
    f1: float


class _Counts(NamedTuple):
    match: float
    cand_total: float
    ref_total: float


def rouge_tokenize(text: str) -> list[str]:
    """Lowercase, strip edge punctuation, Porter-stem; keep stop words."""
    out = []
    for raw in text.split():
        word = raw.strip(_EDGE_CHARS).lower()
        if word:
            out.append(porter_stem(word))
    return out


def _f1(precision: float, recall: float) -> float:
    if precision + recall == 0.0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


def _ratio(num: float, den: float) -> float:
    return num / den if den > 0 else 0.0


def _score_from_counts(counts: _Counts) -> Score:
    precision = _ratio(counts.match, counts.cand_total)
    recall = _ratio(counts.match, counts.ref_total)
    return Score(precision, recall, _f1(precision, recall))


def _aggregate(per_ref_counts: list[_Counts], aggregate: str, invert=None) -> Score:
    if aggregate not in AGGREGATES:
        raise ValueError(f"unknown aggregation mode {aggregate!r}")
    if not per_ref_counts:
        return Score(0.0, 0.0, 0.0)

    def single(counts: _Counts) -> Score:
        if invert is None:
            return _score_from_counts(counts)
        precision = invert(_ratio(counts.match, counts.cand_total))
        recall = invert(_ratio(counts.match, counts.ref_total))
        return Score(precision, recall, _f1(precision, recall))

    scores = [single(c) for c in per_ref_counts]
    if aggregate == "micro":
        pooled = _Counts(
            sum(c.match for c in per_ref_counts),
            sum(c.cand_total for c in per_ref_counts),
            sum(c.ref_total for c in per_ref_counts),
        )
        return single(pooled)
    if aggregate == "jackknife" and len(scores) > 1:
        folds = []
        for leave_out in range(len(scores)):
            rest = [s for i, s in enumerate(scores) if i != leave_out]
            folds.append(max(rest, key=lambda s: s.f1))
        scores = folds
    k = len(scores)
    return Score(
        sum(s.precision for s in scores) / k,
        sum(s.recall for s in scores) / k,
        sum(s.f1 for s in scores) / k,
    )


def _ngrams(tokens: Sequence[str], n: int) -> Counter:
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def _clipped_overlap(cand: Counter, ref: Counter) -> int:
    return sum(min(count, ref[gram]) for gram, count in cand.items() if gram in ref)


def rouge_n(
    candidate: Sequence[str],
    references: Sequence[Sequence[str]],
    n: int,
    aggregate: str = "average",
) -> Score:
    """Clipped n-gram overlap (n is 1 or 2)."""
    if n not in (1, 2):
        raise ValueError("n must be 1 or 2")
    cand_grams = _ngrams(candidate, n)
    cand_total = max(len(candidate) - n + 1, 0)
    per_ref = []
    for ref in references:
        ref_grams = _ngrams(ref, n)
        ref_total = max(len(ref) - n + 1, 0)
        per_ref.append(
            _Counts(_clipped_overlap(cand_grams, ref_grams), cand_total, ref_total)
        )
    return _aggregate(per_ref, aggregate)


def _su_units(tokens: Sequence[str]) -> Counter:
    """Skip-bigrams with positional distance at most 4, plus unigrams."""
    units = Counter(("u", tok) for tok in tokens)
    for i in range(len(tokens)):
        for j in range(i + 1, min(i + SKIP_DISTANCE, len(tokens) - 1) + 1):
            units[("b", tokens[i], tokens[j])] += 1
    return units


def rouge_su4(
    candidate: Sequence[str],
    references: Sequence[Sequence[str]],
    aggregate: str = "average",
) -> Score:
    """Skip-bigram (distance <= 4) plus unigram overlap."""
    cand_units = _su_units(candidate)
    cand_total = sum(cand_units.values())
    per_ref = []
    for ref in references:
        ref_units = _su_units(ref)
        per_ref.append(
            _Counts(
                _clipped_overlap(cand_units, ref_units),
                cand_total,
                sum(ref_units.values()),
            )
        )
    return _aggregate(per_ref, aggregate)


def _wlcs(x: Sequence[str], y: Sequence[str], weight: float) -> float:
    """Exact weighted LCS: maximal total of run_length^weight over all
    common subsequences, where runs must be consecutive in both sequences.

    Each cell keeps the Pareto set of (active run length, score of completed
    runs) for alignments whose last match ends exactly there; a longer run
    with at least the same completed score dominates because the weighting
    is increasing and convex.  A plain single-value recursion is not exact
    here: it can strand a finished high run when a later cheaper match
    overwrites the cell on the way to the corner.
    """

    def f(k: int) -> float:
        return float(k) ** weight

    n, m = len(x), len(y)
    if n == 0 or m == 0:
        return 0.0
    best = 0.0
    prev_states: list = [None] * (m + 1)
    prev_prefix = [0.0] * (m + 1)
    for i in range(1, n + 1):
        cur_states: list = [None] * (m + 1)
        cur_prefix = [0.0] * (m + 1)
        for j in range(1, m + 1):
            finished_here = 0.0
            if x[i - 1] == y[j - 1]:
                candidates = {1: prev_prefix[j - 1]}
                diag = prev_states[j - 1]
                if diag:
                    for run, score in diag.items():
                        if candidates.get(run + 1, -1.0) < score:
                            candidates[run + 1] = score
                pruned = {}
                best_score = -1.0
                for run in sorted(candidates, reverse=True):
                    if candidates[run] > best_score:
                        pruned[run] = candidates[run]
                        best_score = candidates[run]
                cur_states[j] = pruned
                finished_here = max(s + f(k) for k, s in pruned.items())
                if finished_here > best:
                    best = finished_here
            cur_prefix[j] = max(cur_prefix[j - 1], prev_prefix[j], finished_here)
        prev_states = cur_states
        prev_prefix = cur_prefix
    return best


def rouge_w(
    candidate: Sequence[str],
    references: Sequence[Sequence[str]],
    weight: float = DEFAULT_W_WEIGHT,
    aggregate: str = "average",
) -> Score:
    """Weighted LCS with run weighting f(k) = k^weight (weight > 1)."""
    if weight <= 1.0:
        raise ValueError("weight must exceed 1")
    per_ref = []
    for ref in references:
        per_ref.append(
            _Counts(
                _wlcs(candidate, ref, weight),
                len(candidate) ** weight,
                len(ref) ** weight,
            )
        )
    return _aggregate(per_ref, aggregate, invert=lambda v: v ** (1.0 / weight))


def compute_rouge(
    candidate: Sequence[str],
    references: Sequence[Sequence[str]],
    metrics: Sequence[str] = ALL_METRICS,
    weight: float = DEFAULT_W_WEIGHT,
    aggregate: str = "average",
) -> dict[str, Score]:
    """Compute the requested metrics over pre-tokenized inputs."""
    out: dict[str, Score] = {}
    for metric in metrics:
        if metric == R1:
            out[metric] = rouge_n(candidate, references, 1, aggregate)
        elif metric == R2:
            out[metric] = rouge_n(candidate, references, 2, aggregate)
        elif metric == RW:
            out[metric] = rouge_w(candidate, references, weight, aggregate)
        elif metric == RSU4:
            out[metric] = rouge_su4(candidate, references, aggregate)
        else:
            raise ValueError(f"unknown metric {metric!r}")
    return out


def evaluate_summary(
    candidate_text: str,
    reference_texts: Sequence[str],
    metrics: Sequence[str] = ALL_METRICS,
    weight: float = DEFAULT_W_WEIGHT,
    aggregate: str = "average",
) -> dict[str, Score]:
    """Tokenize raw texts and compute the requested ROUGE metrics."""
    candidate = rouge_tokenize(candidate_text)
    references = [rouge_tokenize(ref) for ref in reference_texts]
    return compute_rouge(candidate, references, metrics, weight, aggregate)
