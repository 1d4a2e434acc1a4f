"""Lexical database access: WNDB parsing, lemmatization and path similarity.

This module reads a WordNet 3.x database directory (the plain-text WNDB
format: ``data.{noun,verb,adj,adv}`` plus the matching ``index.*`` files)
into an immutable :class:`SynsetGraph`.  On top of that graph it provides

* morphy-style lemmatization (exception lists first, then suffix rules),
* shortest-path distances over the undirected hypernym graph,
* the path similarity ``a / (a + d)`` between synsets and between words,
* construction of a sparse, symmetric word-similarity matrix with a
  vertical filter (drop pairs farther than ``max_path_length`` hops) and a
  horizontal filter (drop words similar to more than ``max_neighbors``
  other words).

Everything here is deterministic: no caches leak across calls and the
returned matrix does not depend on iteration order of the vocabulary.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import TYPE_CHECKING, Iterable, Mapping, Sequence

from scipy import sparse

from .errors import (
    DisconnectedSynsetsError,
    MissingWordNetFileError,
    UnknownSynsetError,
    WordNetParseError,
)

if TYPE_CHECKING:  # pragma: no cover - import cycle guard, types only
    from .corpus import Term

#: Long part-of-speech names used throughout the public API.
POS_NAMES = ("noun", "verb", "adj", "adv")

#: Maps a long POS name to the single-letter tag used in synset ids.
POS_LETTER = {"noun": "n", "verb": "v", "adj": "a", "adv": "r"}

_LETTER_TO_NAME = {v: k for k, v in POS_LETTER.items()}

# Suffix substitution rules of the morphy algorithm, tried in order.
_MORPHY_RULES = {
    "noun": [
        ("s", ""),
        ("ses", "s"),
        ("ves", "f"),
        ("xes", "x"),
        ("zes", "z"),
        ("ches", "ch"),
        ("shes", "sh"),
        ("men", "man"),
        ("ies", "y"),
    ],
    "verb": [
        ("s", ""),
        ("ies", "y"),
        ("es", "e"),
        ("es", ""),
        ("ed", "e"),
        ("ed", ""),
        ("ing", "e"),
        ("ing", ""),
    ],
    "adj": [("er", ""), ("est", ""), ("er", "e"), ("est", "e")],
    "adv": [],
}

_DATA_FILES = {
    "noun": "data.noun",
    "verb": "data.verb",
    "adj": "data.adj",
    "adv": "data.adv",
}
_INDEX_FILES = {
    "noun": "index.noun",
    "verb": "index.verb",
    "adj": "index.adj",
    "adv": "index.adv",
}
_EXC_FILES = {
    "noun": "noun.exc",
    "verb": "verb.exc",
    "adj": "adj.exc",
    "adv": "adv.exc",
}

_VALID_SS_TYPES = frozenset("nvasr")
_VALID_PTR_POS = frozenset("nvar")


@dataclass(frozen=True)
class Synset:
    """One synonym set: an id like ``"02853224-n"``, its POS and lemmas."""

    synset_id: str
    pos: str  # long name: noun / verb / adj / adv
    lemmas: tuple[str, ...]


@dataclass(frozen=True)
class SynsetGraph:
    """Parsed WordNet database, immutable and safe to share between threads.

    Attributes
    ----------
    synsets : mapping of synset id to :class:`Synset`
        Adjective satellites are folded into POS ``adj``.
    hypernym_edges : mapping of synset id to tuple of synset ids
        Undirected adjacency built from ``@`` and ``@i`` pointers.
    similar_edges : mapping of synset id to tuple of synset ids
        Undirected adjacency built from ``&`` (similar-to) pointers.
    lemma_index : mapping of (lemma, pos letter) to frozenset of synset ids
        Lemmas are lowercase; multiword lemmas keep their underscores.
    exceptions : mapping of pos name to mapping of inflected form to lemmas
        Irregular forms from the ``*.exc`` files.
    """

    synsets: Mapping[str, Synset]
    hypernym_edges: Mapping[str, tuple[str, ...]]
    similar_edges: Mapping[str, tuple[str, ...]]
    lemma_index: Mapping[tuple[str, str], frozenset[str]]
    exceptions: Mapping[str, Mapping[str, tuple[str, ...]]]
    _components: Mapping[str, int] = field(repr=False, default_factory=dict)

    def synset_count(self, pos: str | None = None) -> int:
        """Number of synsets, optionally restricted to one POS name."""
        if pos is None:
            return len(self.synsets)
        return sum(1 for s in self.synsets.values() if s.pos == pos)

    def has_lemma(self, lemma: str, pos: str) -> bool:
        """True if ``lemma`` occurs in the index for POS name ``pos``."""
        return (lemma, POS_LETTER[pos]) in self.lemma_index

    def senses(self, lemma: str, pos: str) -> frozenset[str]:
        """Synset ids containing ``lemma`` with POS name ``pos``."""
        return self.lemma_index.get((lemma, POS_LETTER[pos]), frozenset())

    def morphy(self, form: str, pos: str) -> str | None:
        """Reduce an inflected ``form`` to a lemma present in the index.

        The exception list for ``pos`` is consulted first and, when it
        lists the form, wins outright.  Otherwise the POS-specific suffix
        rules are applied repeatedly until some candidate appears in the
        index.  Returns ``None`` when no analysis succeeds.
        """
        form = form.lower()
        rules = _MORPHY_RULES[pos]
        letter = POS_LETTER[pos]

        def apply_rules(forms: Iterable[str]) -> list[str]:
            return [
                f[: -len(old)] + new
                for f in forms
                for old, new in rules
                if f.endswith(old)
            ]

        def known(forms: Iterable[str]) -> list[str]:
            out, seen = [], set()
            for f in forms:
                if f and f not in seen and (f, letter) in self.lemma_index:
                    out.append(f)
                    seen.add(f)
            return out

        exc = self.exceptions.get(pos, {})
        if form in exc:
            hits = known([form, *exc[form]])
            return hits[0] if hits else None
        candidates = apply_rules([form])
        hits = known([form, *candidates])
        while not hits and candidates:
            candidates = apply_rules(candidates)
            hits = known(candidates)
        return hits[0] if hits else None

    def component_of(self, synset_id: str) -> int:
        """Opaque id of the hypernym-graph component containing the synset."""
        try:
            return self._components[synset_id]
        except KeyError:
            raise UnknownSynsetError(synset_id) from None


@dataclass(frozen=True)
class WordSimMatrix:
    """Sparse symmetric word-to-word similarity over a fixed vocabulary.

    ``matrix`` holds only the surviving off-diagonal entries; the diagonal
    is one by definition and is left implicit.  ``sim_scale``,
    ``max_path_length`` and ``max_neighbors`` record the parameters the
    matrix was built with.
    """

    vocabulary: tuple[str, ...]
    matrix: sparse.csr_matrix
    sim_scale: float
    max_path_length: int
    max_neighbors: int

    @property
    def dim(self) -> int:
        return len(self.vocabulary)

    def entry(self, i: int, j: int) -> float:
        """Similarity between vocabulary rows ``i`` and ``j`` (1 when i=j)."""
        if i == j:
            return 1.0
        return float(self.matrix[i, j])

    def neighbor_count(self, i: int) -> int:
        """Number of stored off-diagonal entries in row ``i``."""
        return int(self.matrix.indptr[i + 1] - self.matrix.indptr[i])


def _decode_line(raw: bytes, path: Path, line_no: int, offset: int) -> str:
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise WordNetParseError(path, line_no, offset, f"undecodable bytes: {exc}")


class _RecordReader:
    """Cursor over the space-separated fields of one database record."""

    def __init__(self, fields: Sequence[str], path: Path, line_no: int, offset: int):
        self.fields = fields
        self.pos = 0
        self.path = path
        self.line_no = line_no
        self.offset = offset

    def fail(self, message: str) -> WordNetParseError:
        return WordNetParseError(self.path, self.line_no, self.offset, message)

    def take(self, what: str) -> str:
        if self.pos >= len(self.fields):
            raise self.fail(f"record truncated while reading {what}")
        value = self.fields[self.pos]
        self.pos += 1
        return value

    def take_int(self, what: str, base: int = 10) -> int:
        value = self.take(what)
        try:
            return int(value, base)
        except ValueError:
            raise self.fail(f"expected {what} as base-{base} integer, got {value!r}")

    def exhausted(self) -> bool:
        return self.pos >= len(self.fields)


def _strip_adj_marker(word: str) -> str:
    # Adjective entries may carry a syntactic marker such as "(p)" or "(a)".
    if word.endswith(")") and "(" in word:
        return word[: word.index("(")]
    return word


def _parse_data_file(path: Path, pos: str, synsets: dict, hyper: dict, similar: dict, edge_refs: list) -> None:
    letter = POS_LETTER[pos]
    data = path.read_bytes()
    offset = 0
    for line_no, raw in enumerate(data.split(b"\n"), start=1):
        line_start = offset
        offset += len(raw) + 1
        line = _decode_line(raw, path, line_no, line_start)
        if not line.strip() or line.startswith(" "):
            continue  # license header lines begin with two spaces
        head, _, _gloss = line.partition("|")
        rec = _RecordReader(head.split(), path, line_no, line_start)

        syn_offset = rec.take("synset offset")
        if not (len(syn_offset) == 8 and syn_offset.isdigit()):
            raise rec.fail(f"malformed synset offset {syn_offset!r}")
        rec.take_int("lex filenum")
        ss_type = rec.take("ss type")
        if ss_type not in _VALID_SS_TYPES:
            raise rec.fail(f"unknown ss_type {ss_type!r}")
        # Satellites ('s') live in data.adj and count as adjectives.
        expected = {"a", "s"} if letter == "a" else {letter}
        if ss_type not in expected:
            raise rec.fail(f"ss_type {ss_type!r} does not belong in {path.name}")

        w_cnt = rec.take_int("word count", base=16)
        if w_cnt < 1:
            raise rec.fail("word count must be at least 1")
        lemmas = []
        for _ in range(w_cnt):
            word = _strip_adj_marker(rec.take("word"))
            if not word:
                raise rec.fail("empty word field")
            rec.take_int("lex id", base=16)
            lemmas.append(word.lower())

        synset_id = f"{syn_offset}-{letter}"
        if synset_id in synsets:
            raise rec.fail(f"duplicate synset offset {syn_offset}")
        synsets[synset_id] = Synset(synset_id, pos, tuple(lemmas))
        hyper.setdefault(synset_id, [])
        similar.setdefault(synset_id, [])

        p_cnt = rec.take_int("pointer count")
        for _ in range(p_cnt):
            symbol = rec.take("pointer symbol")
            tgt_offset = rec.take("pointer offset")
            if not (len(tgt_offset) == 8 and tgt_offset.isdigit()):
                raise rec.fail(f"malformed pointer offset {tgt_offset!r}")
            tgt_pos = rec.take("pointer pos")
            if tgt_pos not in _VALID_PTR_POS:
                raise rec.fail(f"unknown pointer pos {tgt_pos!r}")
            src_tgt = rec.take("pointer source/target")
            if len(src_tgt) != 4:
                raise rec.fail(f"malformed source/target field {src_tgt!r}")
            try:
                int(src_tgt, 16)
            except ValueError:
                raise rec.fail(f"malformed source/target field {src_tgt!r}") from None
            target_id = f"{tgt_offset}-{tgt_pos}"
            if symbol in ("@", "@i"):
                if tgt_pos != letter:
                    raise rec.fail("hypernym pointer crosses part of speech")
                edge_refs.append(("hyper", synset_id, target_id, path, line_no, line_start))
            elif symbol == "&":
                edge_refs.append(("similar", synset_id, target_id, path, line_no, line_start))
            # all other pointer types are ignored

        if letter == "v" and not rec.exhausted():
            f_cnt = rec.take_int("frame count")
            for _ in range(f_cnt):
                plus = rec.take("frame marker")
                if plus != "+":
                    raise rec.fail(f"expected '+' before frame, got {plus!r}")
                rec.take_int("frame number")
                rec.take_int("frame word number", base=16)
        if not rec.exhausted():
            raise rec.fail(f"unexpected trailing field {rec.fields[rec.pos]!r}")


def _parse_index_file(path: Path, pos: str, synsets: Mapping[str, Synset], lemma_index: dict) -> None:
    letter = POS_LETTER[pos]
    data = path.read_bytes()
    offset = 0
    for line_no, raw in enumerate(data.split(b"\n"), start=1):
        line_start = offset
        offset += len(raw) + 1
        line = _decode_line(raw, path, line_no, line_start)
        if not line.strip() or line.startswith(" "):
            continue
        rec = _RecordReader(line.split(), path, line_no, line_start)

        lemma = rec.take("lemma").lower()
        idx_pos = rec.take("pos tag")
        if idx_pos != letter:
            raise rec.fail(f"pos tag {idx_pos!r} does not belong in {path.name}")
        synset_cnt = rec.take_int("synset count")
        if synset_cnt < 1:
            raise rec.fail("synset count must be at least 1")
        p_cnt = rec.take_int("pointer symbol count")
        for _ in range(p_cnt):
            rec.take("pointer symbol")
        rec.take_int("sense count")
        rec.take_int("tagsense count")
        ids = []
        for _ in range(synset_cnt):
            syn_offset = rec.take("synset offset")
            if not (len(syn_offset) == 8 and syn_offset.isdigit()):
                raise rec.fail(f"malformed synset offset {syn_offset!r}")
            synset_id = f"{syn_offset}-{letter}"
            if synset_id not in synsets:
                raise rec.fail(f"index references unknown synset {syn_offset}")
            if lemma not in synsets[synset_id].lemmas:
                raise rec.fail(f"synset {syn_offset} does not list lemma {lemma!r}")
            ids.append(synset_id)
        if not rec.exhausted():
            raise rec.fail(f"unexpected trailing field {rec.fields[rec.pos]!r}")
        key = (lemma, letter)
        if key in lemma_index:
            raise rec.fail(f"duplicate index entry for {lemma!r}")
        lemma_index[key] = frozenset(ids)


def _parse_exc_file(path: Path) -> dict[str, tuple[str, ...]]:
    out: dict[str, tuple[str, ...]] = {}
    data = path.read_bytes()
    offset = 0
    for line_no, raw in enumerate(data.split(b"\n"), start=1):
        line_start = offset
        offset += len(raw) + 1
        line = _decode_line(raw, path, line_no, line_start)
        fields = line.split()
        if not fields:
            continue
        if len(fields) < 2:
            raise WordNetParseError(
                path, line_no, line_start, "exception entry needs a form and a lemma"
            )
        out[fields[0].lower()] = tuple(f.lower() for f in fields[1:])
    return out


class _UnionFind:
    def __init__(self):
        self.parent: dict[str, str] = {}

    def find(self, x: str) -> str:
        parent = self.parent
        root = x
        while parent.setdefault(root, root) != root:
            root = parent[root]
        while parent[x] != root:  # path compression
            parent[x], x = root, parent[x]
        return root

    def union(self, a: str, b: str) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def parse_wordnet(directory: str | os.PathLike) -> SynsetGraph:
    """Parse a WNDB-format WordNet directory into a :class:`SynsetGraph`.

    Parameters
    ----------
    directory : path-like
        Directory holding ``data.{noun,verb,adj,adv}`` and
        ``index.{noun,verb,adj,adv}``.  The morphy exception lists
        (``noun.exc`` and friends) are loaded when present.

    Raises
    ------
    MissingWordNetFileError
        If any of the eight required database files is absent.
    WordNetParseError
        On any malformed record, reporting file, line and byte offset.
    """
    base = Path(directory)
    required = [*_DATA_FILES.values(), *_INDEX_FILES.values()]
    missing = [name for name in required if not (base / name).is_file()]
    if missing:
        raise MissingWordNetFileError(
            f"missing WordNet database file(s) in {base}: {', '.join(sorted(missing))}"
        )

    synsets: dict[str, Synset] = {}
    hyper: dict[str, list[str]] = {}
    similar: dict[str, list[str]] = {}
    edge_refs: list[tuple] = []
    for pos in POS_NAMES:
        _parse_data_file(base / _DATA_FILES[pos], pos, synsets, hyper, similar, edge_refs)

    # Resolve pointers only after every file is read: forward references
    # across files are legal in the format.
    for kind, src, dst, path, line_no, line_start in edge_refs:
        if dst not in synsets:
            raise WordNetParseError(
                path, line_no, line_start, f"pointer references unknown synset {dst}"
            )
        table = hyper if kind == "hyper" else similar
        if dst not in table[src]:
            table[src].append(dst)
        if src not in table[dst]:  # traversal is undirected
            table[dst].append(src)

    lemma_index: dict[tuple[str, str], frozenset[str]] = {}
    for pos in POS_NAMES:
        _parse_index_file(base / _INDEX_FILES[pos], pos, synsets, lemma_index)

    exceptions: dict[str, dict[str, tuple[str, ...]]] = {}
    for pos in POS_NAMES:
        exc_path = base / _EXC_FILES[pos]
        exceptions[pos] = _parse_exc_file(exc_path) if exc_path.is_file() else {}

    uf = _UnionFind()
    for src, targets in hyper.items():
        uf.find(src)
        for dst in targets:
            uf.union(src, dst)
    roots = {sid: uf.find(sid) for sid in synsets}
    root_ids = {root: i for i, root in enumerate(sorted(set(roots.values())))}
    components = {sid: root_ids[root] for sid, root in roots.items()}

    return SynsetGraph(
        synsets=synsets,
        hypernym_edges={k: tuple(v) for k, v in hyper.items()},
        similar_edges={k: tuple(v) for k, v in similar.items()},
        lemma_index=lemma_index,
        exceptions=exceptions,
        _components=components,
    )


def synset_distance(
    graph: SynsetGraph, s1: str, s2: str, max_depth: int | None = None
) -> int | None:
    """Shortest-path length between two synsets in the hypernym graph.

    Edges are traversed in both directions.  Returns ``None`` when the
    synsets lie in different components (or farther than ``max_depth``
    when a cap is given).

    Raises
    ------
    UnknownSynsetError
        If either id is not in the database.
    """
    for s in (s1, s2):
        if s not in graph.synsets:
            raise UnknownSynsetError(s)
    if s1 == s2:
        return 0
    # Cheap pre-check: different components can never meet.
    if graph._components and graph.component_of(s1) != graph.component_of(s2):
        return None
    frontier = deque([(s1, 0)])
    seen = {s1}
    while frontier:
        node, d = frontier.popleft()
        if max_depth is not None and d >= max_depth:
            continue
        for nxt in graph.hypernym_edges.get(node, ()):
            if nxt == s2:
                return d + 1
            if nxt not in seen:
                seen.add(nxt)
                frontier.append((nxt, d + 1))
    return None


def synset_similarity(graph: SynsetGraph, s1: str, s2: str, sim_scale: float = 1.0) -> float:
    """Path similarity ``sim_scale / (sim_scale + d)`` between two synsets.

    Raises
    ------
    DisconnectedSynsetsError
        When no path exists; callers that want a number map this to 0.
    """
    if sim_scale <= 0:
        raise ValueError(f"sim_scale must be positive, got {sim_scale}")
    d = synset_distance(graph, s1, s2)
    if d is None:
        raise DisconnectedSynsetsError(f"no path between {s1} and {s2}")
    return sim_scale / (sim_scale + d)


def _term_senses(graph: SynsetGraph, term: "Term") -> frozenset[str]:
    """Synsets of a term's lemma across every POS the term can take."""
    out: set[str] = set()
    for pos in term.pos_tags:
        out.update(graph.senses(term.lemma, pos))
    return frozenset(out)


def _best_pair_distance(
    graph: SynsetGraph,
    senses1: frozenset[str],
    senses2: frozenset[str],
) -> int | None:
    """Minimum sense-pair distance, or ``None`` when every pair is apart.

    Shared synsets give 0; a direct similar-to link gives 1 (adjective
    clusters have no hypernyms); otherwise the hypernym BFS decides.
    """
    if not senses1 or not senses2:
        return None
    if senses1 & senses2:
        return 0
    best: int | None = None
    for s1 in senses1:
        if senses2 & set(graph.similar_edges.get(s1, ())):
            best = 1
            break
    for s1 in senses1:
        if best == 1:
            break
        for s2 in senses2:
            if graph.component_of(s1) != graph.component_of(s2):
                continue
            # Searching past an already-found distance cannot improve it.
            cap = None if best is None else best - 1
            d = synset_distance(graph, s1, s2, max_depth=cap)
            if d is not None and (best is None or d < best):
                best = d
                if best == 1:
                    break
    return best


def word_similarity(graph: SynsetGraph, w1: "Term", w2: "Term", sim_scale: float = 1.0) -> float:
    """Maximum path similarity over all sense pairs of two terms.

    Returns 1.0 when the terms share a stem, 0.0 when either term has no
    senses or every sense pair is disconnected.
    """
    if sim_scale <= 0:
        raise ValueError(f"sim_scale must be positive, got {sim_scale}")
    if w1.stem == w2.stem:
        return 1.0
    d = _best_pair_distance(graph, _term_senses(graph, w1), _term_senses(graph, w2))
    if d is None:
        return 0.0
    return sim_scale / (sim_scale + d)


def _capped_distance_map(
    graph: SynsetGraph, senses: frozenset[str], max_depth: int
) -> dict[str, int]:
    """Multi-source BFS: distance from the sense set to every synset <= cap."""
    dist = {s: 0 for s in senses}
    frontier = deque(dist)
    while frontier:
        node = frontier.popleft()
        d = dist[node]
        if d >= max_depth:
            continue
        for nxt in graph.hypernym_edges.get(node, ()):
            if nxt not in dist:
                dist[nxt] = d + 1
                frontier.append(nxt)
    return dist


def build_word_sim_matrix(
    graph: SynsetGraph,
    vocabulary: Sequence["Term"],
    sim_scale: float = 1.0,
    max_path_length: int = 4,
    max_neighbors: int = 5000,
) -> WordSimMatrix:
    """Build the filtered symmetric word-similarity matrix for a vocabulary.

    The vertical filter keeps an off-diagonal entry only when the best
    sense-pair distance is at most ``max_path_length``.  The horizontal
    filter then removes every entry of any word that is similar (at any
    distance, before the vertical cap) to more than ``max_neighbors``
    other vocabulary words; such over-connected words are treated as not
    salient.  Counting neighbors on the uncapped relation keeps the
    result monotone in ``max_path_length``.

    Parameters
    ----------
    vocabulary : sequence of Term
        One term per distinct stem; duplicate stems are rejected.

    Returns
    -------
    WordSimMatrix
        CSR matrix of the surviving off-diagonal similarities.
    """
    if len(vocabulary) == 0:
        raise ValueError("vocabulary must be non-empty")
    if sim_scale <= 0:
        raise ValueError(f"sim_scale must be positive, got {sim_scale}")
    if max_path_length < 0:
        raise ValueError(f"max_path_length must be >= 0, got {max_path_length}")
    if max_neighbors < 0:
        raise ValueError(f"max_neighbors must be >= 0, got {max_neighbors}")
    stems = [t.stem for t in vocabulary]
    if len(set(stems)) != len(stems):
        raise ValueError("vocabulary stems must be distinct")

    m = len(vocabulary)
    senses = [_term_senses(graph, t) for t in vocabulary]
    components = [{graph.component_of(s) for s in ss} for ss in senses]
    similar_of = [
        frozenset(
            nxt for s in ss for nxt in graph.similar_edges.get(s, ())
        )
        for ss in senses
    ]

    # Uncapped positive-similarity relation: shared synset, any connected
    # sense pair, or a direct similar-to link.
    related = [[False] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            if not senses[i] or not senses[j]:
                continue
            linked = (
                bool(senses[i] & senses[j])
                or bool(components[i] & components[j])
                or bool(similar_of[i] & senses[j])
            )
            related[i][j] = related[j][i] = linked
    neighbor_total = [sum(row) for row in related]
    dropped = [neighbor_total[i] > max_neighbors for i in range(m)]

    dist_maps = [
        _capped_distance_map(graph, ss, max_path_length) if ss and not dropped[i] else {}
        for i, ss in enumerate(senses)
    ]

    rows: list[int] = []
    cols: list[int] = []
    vals: list[float] = []
    for i in range(m):
        if dropped[i]:
            continue
        for j in range(i + 1, m):
            if dropped[j] or not related[i][j]:
                continue
            if senses[i] & senses[j]:
                d: int | None = 0
            else:
                d = None
                for s2 in senses[j]:
                    cand = dist_maps[i].get(s2)
                    if cand is not None and (d is None or cand < d):
                        d = cand
                if (d is None or d > 1) and similar_of[i] & senses[j]:
                    d = 1
            if d is None or d > max_path_length:
                continue
            value = sim_scale / (sim_scale + d)
            rows.extend((i, j))
            cols.extend((j, i))
            vals.extend((value, value))

    matrix = sparse.csr_matrix((vals, (rows, cols)), shape=(m, m))
    return WordSimMatrix(
        vocabulary=tuple(stems),
        matrix=matrix,
        sim_scale=sim_scale,
        max_path_length=max_path_length,
        max_neighbors=max_neighbors,
    )
