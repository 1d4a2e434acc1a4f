"""Topic loading and preprocessing: sentences, terms and TF-ISF weights.

A topic directory holds ``query.txt`` (title on the first line, narrative
on the rest), a ``docs/`` directory of plain-text documents and an
optional ``models/`` directory of reference summaries.  Loading produces
an immutable :class:`Topic` whose sentences carry filtered content terms;
:func:`build_matrix` then turns the topic into the sparse sentence-word
matrix that every downstream stage consumes.

Preprocessing drops stopwords, tokens containing digits or ``@``
(numbers, emails), punctuation and single characters.  A surviving token
must lemmatize, via the lexicon's morphy rules, to a headword present in
the lexicon index for at least one part of speech; this is what "content
word" means here.  Each kept term records the stem of its lemma (used for
weighting and overlap) alongside the lemma itself (used for similarity
lookups).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np
from scipy import sparse
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from .errors import ConfigError, EmptyTopicError
from .stemming import porter_stem
from .wordnet import POS_NAMES, SynsetGraph

#: doc_id assigned to the merged query row.
QUERY_DOC_ID = "<query>"

# Characters stripped from token edges before the alphabetic check; covers
# ASCII punctuation plus common typographic quotes and dashes.
_STRIP_CHARS = "".join(
    chr(c) for c in range(33, 127) if not chr(c).isalnum()
) + "‘’“”–—…"

_POSSESSIVE_SUFFIXES = ("'s", "’s")


@dataclass(frozen=True)
class Term:
    """One content word: the stem used for weighting, the lemma used for
    lexicon lookups, and every part of speech the surface form can take."""

    stem: str
    lemma: str
    pos_tags: frozenset[str]


@dataclass(frozen=True)
class Sentence:
    """A sentence with its provenance and filtered tokens.

    ``word_count`` counts the whitespace tokens of ``raw_text`` before any
    filtering; it is what summary budgets are charged against.
    """

    topic_local_index: int
    doc_id: str
    position_in_doc: int
    raw_text: str
    tokens: tuple[Term, ...]
    word_count: int

    @property
    def stems(self) -> tuple[str, ...]:
        return tuple(t.stem for t in self.tokens)


@dataclass(frozen=True)
class Topic:
    """A query plus its document collection.

    ``vocabulary`` lists the distinct stems of every sentence, query
    included, in first-occurrence order (query sentences first).
    """

    topic_id: str
    query_sentences: tuple[Sentence, ...]
    documents: tuple[tuple[str, tuple[Sentence, ...]], ...]
    vocabulary: tuple[str, ...]

    @property
    def document_sentences(self) -> tuple[Sentence, ...]:
        return tuple(s for _, sentences in self.documents for s in sentences)

    @property
    def merged_query(self) -> Sentence:
        """Query sentences merged into the single row the ranking uses."""
        raw = " ".join(s.raw_text for s in self.query_sentences)
        tokens = tuple(t for s in self.query_sentences for t in s.tokens)
        return Sentence(
            topic_local_index=0,
            doc_id=QUERY_DOC_ID,
            position_in_doc=0,
            raw_text=raw,
            tokens=tokens,
            word_count=len(raw.split()),
        )

    @property
    def rows(self) -> tuple[Sentence, ...]:
        """Sentences in matrix-row order: merged query first."""
        return (self.merged_query, *self.document_sentences)


@dataclass(frozen=True)
class SentenceWordMatrix:
    """Sparse TF-ISF weights, one row per sentence, one column per stem."""

    matrix: sparse.csr_matrix
    vocabulary: tuple[str, ...]
    query_rows: frozenset[int]

    @property
    def rows(self) -> int:
        return int(self.matrix.shape[0])

    @property
    def cols(self) -> int:
        return int(self.matrix.shape[1])


@lru_cache(maxsize=1)
def load_stopwords() -> frozenset[str]:
    """The bundled stopword list (about 500 lowercase words)."""
    text = resources.files("maniquery").joinpath("data/stopwords.txt").read_text("utf-8")
    return frozenset(w for w in text.split() if w)


@lru_cache(maxsize=1)
def load_abbreviations() -> frozenset[str]:
    """Sentence-splitter stop-list of abbreviations, lowercased."""
    text = resources.files("maniquery").joinpath("data/abbreviations.txt").read_text("utf-8")
    return frozenset(w.lower() for w in text.split() if w)


def split_sentences(text: str) -> list[str]:
    """Split text at ``.!?`` runs followed by whitespace and an uppercase
    letter, unless the preceding token is a known abbreviation.

    The returned sentences carry every non-whitespace character of the
    input, in order; a trailing fragment without terminal punctuation is
    returned as a final sentence.
    """
    abbreviations = load_abbreviations()
    sentences: list[str] = []
    start = 0
    i = 0
    n = len(text)
    while i < n:
        if text[i] not in ".!?":
            i += 1
            continue
        j = i + 1
        while j < n and text[j] in ".!?":
            j += 1
        k = j
        while k < n and text[k].isspace():
            k += 1
        if k > j and k < n and text[k].isupper():
            candidate = text[start:j].strip()
            trailing = candidate.split()[-1] if candidate.split() else ""
            trailing = trailing.lstrip(_STRIP_CHARS)
            if trailing.lower() not in abbreviations:
                if candidate:
                    sentences.append(candidate)
                start = k
        i = j
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences


def _clean_token(token: str) -> str | None:
    """Strip edge punctuation and possessives; None when nothing survives
    the digit/email/alphabetic checks."""
    if "@" in token or any(c.isdigit() for c in token):
        return None
    token = token.strip(_STRIP_CHARS)
    low = token.lower()
    for suffix in _POSSESSIVE_SUFFIXES:
        if low.endswith(suffix):
            token = token[: -len(suffix)]
            low = low[: -len(suffix)]
            break
    if len(low) < 2 or not low.isalpha():
        return None
    return low


def tokenize_and_filter(
    sentence: str, stopwords: Iterable[str], lexicon: SynsetGraph
) -> list[Term]:
    """Reduce a sentence to its content terms, in original order.

    A token survives when it is not a stopword, carries no digit or ``@``,
    is at least two letters once edge punctuation is stripped, and its
    morphy lemma exists in the lexicon for some part of speech.  The
    lemma of the first matching POS (noun before verb before adj before
    adv) names the term; every matching POS lands in ``pos_tags``.
    """
    stopset = stopwords if isinstance(stopwords, frozenset) else frozenset(stopwords)
    terms: list[Term] = []
    for raw in sentence.split():
        low = _clean_token(raw)
        if low is None or low in stopset:
            continue
        lemma = None
        tags = []
        for pos in POS_NAMES:
            candidate = lexicon.morphy(low, pos)
            if candidate is not None:
                tags.append(pos)
                if lemma is None:
                    lemma = candidate
        if lemma is None:
            continue
        terms.append(Term(stem=porter_stem(lemma), lemma=lemma, pos_tags=frozenset(tags)))
    return terms


def _read_text(path: Path) -> str:
    try:
        return path.read_text("utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from exc


def _sentences_for_doc(
    doc_id: str,
    text: str,
    stopwords: frozenset[str],
    lexicon: SynsetGraph,
    next_index: int,
) -> list[Sentence]:
    out = []
    for position, raw in enumerate(split_sentences(text)):
        out.append(
            Sentence(
                topic_local_index=next_index + position,
                doc_id=doc_id,
                position_in_doc=position,
                raw_text=raw,
                tokens=tuple(tokenize_and_filter(raw, stopwords, lexicon)),
                word_count=len(raw.split()),
            )
        )
    return out


def load_topic(topic_dir: str | Path, lexicon: SynsetGraph) -> Topic:
    """Load one topic directory into a :class:`Topic`.

    Expects ``query.txt`` and ``docs/*.txt``; documents are ordered
    lexicographically by filename and sentences indexed in reading order,
    with the merged query always occupying row 0.
    """
    base = Path(topic_dir)
    query_path = base / "query.txt"
    if not query_path.is_file():
        raise ConfigError(f"topic {base} has no query.txt")
    docs_dir = base / "docs"
    if not docs_dir.is_dir():
        raise ConfigError(f"topic {base} has no docs directory")

    stopwords = load_stopwords()
    query_text = _read_text(query_path)
    query_lines = query_text.splitlines()
    title = query_lines[0] if query_lines else ""
    narrative = "\n".join(query_lines[1:])
    query_sentences = []
    for position, raw in enumerate(split_sentences(title) + split_sentences(narrative)):
        query_sentences.append(
            Sentence(
                topic_local_index=0,
                doc_id=QUERY_DOC_ID,
                position_in_doc=position,
                raw_text=raw,
                tokens=tuple(tokenize_and_filter(raw, stopwords, lexicon)),
                word_count=len(raw.split()),
            )
        )

    documents = []
    next_index = 1
    for doc_path in sorted(docs_dir.glob("*.txt"), key=lambda p: p.name):
        sentences = _sentences_for_doc(
            doc_path.stem, _read_text(doc_path), stopwords, lexicon, next_index
        )
        next_index += len(sentences)
        documents.append((doc_path.stem, tuple(sentences)))

    vocabulary: list[str] = []
    seen: set[str] = set()
    all_sentences = [*query_sentences, *(s for _, ss in documents for s in ss)]
    for sentence in all_sentences:
        for term in sentence.tokens:
            if term.stem not in seen:
                seen.add(term.stem)
                vocabulary.append(term.stem)

    return Topic(
        topic_id=base.name,
        query_sentences=tuple(query_sentences),
        documents=tuple(documents),
        vocabulary=tuple(vocabulary),
    )


def load_models(topic_dir: str | Path) -> list[tuple[str, str]]:
    """Reference summaries under ``<topic>/models/*.txt``, by filename."""
    models_dir = Path(topic_dir) / "models"
    if not models_dir.is_dir():
        return []
    return [
        (p.stem, _read_text(p))
        for p in sorted(models_dir.glob("*.txt"), key=lambda q: q.name)
    ]


def representative_terms(topic: Topic) -> list[Term]:
    """One term per vocabulary stem, first occurrence wins."""
    chosen: dict[str, Term] = {}
    for sentence in topic.rows:
        for term in sentence.tokens:
            chosen.setdefault(term.stem, term)
    return [chosen[stem] for stem in topic.vocabulary]


class TfIsfVectorizer(BaseEstimator, TransformerMixin):
    """Term-frequency times inverse sentence frequency, the natural-log form.

    The vectorizer is fit on tokenized rows (sequences of stems).  Weights
    are ``tf * ln(N / sf)`` where ``N`` is the number of fitted rows and
    ``sf`` counts fitted rows containing the stem; stems present in every
    row weigh zero and are not stored.

    Parameters
    ----------
    vocabulary : sequence of str, optional
        Fix the column order up front; defaults to first-occurrence order
        over the fitted rows.

    Attributes
    ----------
    vocabulary_ : dict of str to int
        Maps each stem to its column.
    isf_ : ndarray of shape (M,)
        ``ln(N / sf)`` per column, zero where ``sf`` is zero or ``N``.
    """

    def __init__(self, vocabulary: Sequence[str] | None = None):
        self.vocabulary = vocabulary

    @staticmethod
    def _validate_rows(X) -> list[list[str]]:
        if isinstance(X, (str, bytes)):
            raise TypeError("X must be an iterable of token sequences, not a string")
        rows = []
        for i, row in enumerate(X):
            if isinstance(row, (str, bytes)):
                raise TypeError(f"row {i} is a string; expected a sequence of stems")
            tokens = list(row)
            for tok in tokens:
                if not isinstance(tok, str):
                    raise TypeError(f"row {i} holds a non-string token {tok!r}")
            rows.append(tokens)
        if not rows:
            raise ValueError("X must contain at least one row")
        return rows

    def fit(self, X, y=None):
        rows = self._validate_rows(X)
        if self.vocabulary is not None:
            vocab = list(self.vocabulary)
            if len(set(vocab)) != len(vocab):
                raise ValueError("vocabulary contains duplicate stems")
        else:
            vocab, seen = [], set()
            for row in rows:
                for tok in row:
                    if tok not in seen:
                        seen.add(tok)
                        vocab.append(tok)
        index = {stem: col for col, stem in enumerate(vocab)}
        n = len(rows)
        sf = np.zeros(len(vocab))
        for row in rows:
            for stem in set(row):
                if stem in index:
                    sf[index[stem]] += 1
        isf = np.zeros(len(vocab))
        present = sf > 0
        isf[present] = np.log(n / sf[present])
        self.vocabulary_ = index
        self.isf_ = isf
        self.n_rows_ = n
        return self

    def transform(self, X) -> sparse.csr_matrix:
        if not hasattr(self, "vocabulary_"):
            raise NotFittedError("TfIsfVectorizer must be fit before transform")
        rows = self._validate_rows(X)
        data, indices, indptr = [], [], [0]
        for row in rows:
            counts: dict[int, int] = {}
            for stem in row:
                col = self.vocabulary_.get(stem)
                if col is not None:
                    counts[col] = counts.get(col, 0) + 1
            for col in sorted(counts):
                weight = counts[col] * self.isf_[col]
                if weight > 0:
                    data.append(weight)
                    indices.append(col)
            indptr.append(len(data))
        return sparse.csr_matrix(
            (data, indices, indptr), shape=(len(rows), len(self.vocabulary_))
        )


def build_matrix(topic: Topic) -> SentenceWordMatrix:
    """TF-ISF matrix over the topic rows: merged query at row 0.

    Raises
    ------
    EmptyTopicError
        When the topic has no document sentences or no query sentences.
    """
    if not topic.document_sentences:
        raise EmptyTopicError(f"topic {topic.topic_id} has no document sentences")
    if not topic.query_sentences:
        raise EmptyTopicError(f"topic {topic.topic_id} has no query sentences")
    token_rows = [list(s.stems) for s in topic.rows]
    vectorizer = TfIsfVectorizer(vocabulary=topic.vocabulary)
    matrix = vectorizer.fit_transform(token_rows)
    return SentenceWordMatrix(
        matrix=matrix, vocabulary=topic.vocabulary, query_rows=frozenset({0})
    )
