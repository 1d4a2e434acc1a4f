"""End-to-end orchestration: ingest, expand, rank, extract, evaluate.

Configuration lives in a flat ``key = value`` text format so sweep logs diff
cleanly.  Topics run independently (optionally in a thread pool); every
artifact is written atomically and all outputs are deterministic for a given
config, corpus and lexicon, regardless of worker count.
"""

from __future__ import annotations

import dataclasses
import json
import os
import tempfile
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

import numpy as np
from scipy import io as scipy_io
from scipy import sparse

from .corpus import (
    Topic,
    build_matrix,
    load_models,
    load_topic,
    representative_terms,
)
from .errors import ConfigError
from .expansion import (
    ALL_EXPANSIONS,
    SIM_WORD,
    TEXTRANK_WORDS,
    ExpandedQuery,
    ExpansionConfig,
    expand_query,
    replace_query_row,
)
from .ranking import manifold_rank, textrank_scores
from .rouge import ALL_METRICS, Score, evaluate_summary
from .simgraph import GraphWeights, SimilarityGraph, build_graph, cosine_matrix
from .summarize import Summary, extract_summary
from .wordnet import SynsetGraph, build_word_sim_matrix, parse_wordnet


@dataclass(frozen=True)
class PipelineConfig:
    """Every tunable in one flat record.

    Path fields point at the corpus root (one directory per topic), the
    WordNet database directory (required: the tokenizer gates words through
    the lexicon), the output root, and an optional debug dump directory.
    """

    corpus_dir: str = ""
    wordnet_dir: str = ""
    output_dir: str = "out"
    debug_dir: str = ""
    # Word-similarity matrix.
    sim_scale: float = 1.0
    max_path_length: int = 4
    max_neighbors: int = 5000
    # Query expansion.
    theta_mean: float = 1.0
    theta_var: float = 1.0
    theta_rank: float = 1.0
    c_words: int = 100
    expansions: str = "mean,simword,textrank,variance"
    # Sentence graph blend.
    alpha_cos: float = 0.9
    alpha_overlap: float = 0.1
    alpha_peer: float = 0.4
    # Solvers.
    alpha_mr: float = 0.6
    damping: float = 0.6
    r_t: float = 0.4
    tol: float = 1e-9
    max_iter: int = 10000
    # Extraction.
    redundancy_penalty: float = 8.0
    budget: int = 250
    # Evaluation.
    rouge_weight: float = 1.2
    rouge_aggregate: str = "average"
    # Execution.
    workers: int = 1

    def enabled_expansions(self) -> frozenset:
        names = frozenset(p.strip() for p in self.expansions.split(",") if p.strip())
        unknown = names - ALL_EXPANSIONS
        if unknown:
            raise ConfigError(f"unknown expansion names: {sorted(unknown)}")
        return names

    def expansion_config(self) -> ExpansionConfig:
        return ExpansionConfig(
            theta_mean=self.theta_mean,
            theta_var=self.theta_var,
            theta_rank=self.theta_rank,
            c_words=self.c_words,
            enabled=self.enabled_expansions(),
        )

    def graph_weights(self) -> GraphWeights:
        return GraphWeights(self.alpha_cos, self.alpha_overlap, self.alpha_peer)

    def to_text(self) -> str:
        lines = [
            f"{field.name} = {getattr(self, field.name)}"
            for field in dataclasses.fields(self)
        ]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "PipelineConfig":
        overrides = {}
        for line_no, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"line {line_no}: expected 'key = value', got {raw!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            overrides[key] = value
        return cls().with_overrides(overrides)

    @classmethod
    def from_file(cls, path: str | Path) -> "PipelineConfig":
        path = Path(path)
        if not path.is_file():
            raise ConfigError(f"config file not found: {path}")
        return cls.from_text(path.read_text(encoding="utf-8"))

    def with_overrides(self, overrides: dict) -> "PipelineConfig":
        """Apply string key/value overrides with per-field type coercion."""
        types = {field.name: field.type for field in dataclasses.fields(self)}
        coerced = {}
        for key, value in overrides.items():
            if key not in types:
                raise ConfigError(f"unknown config key: {key}")
            current = getattr(PipelineConfig(), key)
            try:
                if isinstance(current, int):
                    coerced[key] = int(value)
                elif isinstance(current, float):
                    coerced[key] = float(value)
                else:
                    coerced[key] = str(value)
            except ValueError as exc:
                raise ConfigError(f"bad value for {key}: {value!r}") from exc
        return dataclasses.replace(self, **coerced)


@dataclass(frozen=True)
class TopicResult:
    """Everything computed for one topic."""

    topic_id: str
    summary: Summary
    scores: Optional[dict]
    graph: SimilarityGraph
    expanded: ExpandedQuery
    topic: Topic


@dataclass(frozen=True)
class PipelineResult:
    results: tuple[TopicResult, ...]
    failures: dict
    aggregate: dict


def _atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def compute_topic(topic_dir: Path, config: PipelineConfig, lexicon: SynsetGraph) -> TopicResult:
    """Run the full per-topic computation without touching the filesystem
    (beyond reading the topic)."""
    topic = load_topic(topic_dir, lexicon)
    matrix = build_matrix(topic)
    sentences = topic.rows
    enabled = config.enabled_expansions()

    sim = None
    if SIM_WORD in enabled:
        sim = build_word_sim_matrix(
            lexicon,
            representative_terms(topic),
            sim_scale=config.sim_scale,
            max_path_length=config.max_path_length,
            max_neighbors=config.max_neighbors,
        )

    p_star = None
    if TEXTRANK_WORDS in enabled:
        cos_all = cosine_matrix(matrix.matrix)
        doc_idx = [i for i in range(matrix.rows) if i not in matrix.query_rows]
        query_rel = cos_all[0, doc_idx]
        W_docs = cos_all[np.ix_(doc_idx, doc_idx)].copy()
        np.fill_diagonal(W_docs, 0.0)
        p_star = textrank_scores(
            W_docs,
            query_rel,
            damping=config.damping,
            r_t=config.r_t,
            tol=config.tol,
            max_iter=config.max_iter,
        )

    expanded = expand_query(matrix, config.expansion_config(), sim=sim, p_star=p_star)
    A1 = replace_query_row(matrix, expanded.values)
    graph = build_graph(A1, sentences, config.graph_weights(), A0=matrix.matrix)

    y = np.zeros(graph.n)
    for row in matrix.query_rows:
        y[row] = 1.0
    ranking = manifold_rank(
        graph,
        y,
        alpha_mr=config.alpha_mr,
        tol=config.tol,
        max_iter=config.max_iter,
    )
    summary = extract_summary(
        ranking,
        graph,
        sentences,
        redundancy_penalty=config.redundancy_penalty,
        budget=config.budget,
    )

    models = load_models(topic_dir)
    scores = None
    if models:
        scores = evaluate_summary(
            summary.text,
            [text for _, text in models],
            weight=config.rouge_weight,
            aggregate=config.rouge_aggregate,
        )
    return TopicResult(topic.topic_id, summary, scores, graph, expanded, topic)


def _score_payload(scores: dict) -> dict:
    return {
        metric: {
            "precision": value.precision,
            "recall": value.recall,
            "f1": value.f1,
        }
        for metric, value in scores.items()
    }


def write_topic_outputs(
    result: TopicResult,
    out_dir: Path,
    config: PipelineConfig,
    dump_graph: bool = False,
) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    _atomic_write(out_dir / "summary.txt", result.summary.text + "\n")
    selection = {
        "selected": list(result.summary.selected),
        "word_count": result.summary.word_count,
        "truncated": result.summary.truncated,
        "picks": [
            {
                "index": record.index,
                "score_at_pick": record.score_at_pick,
                "penalties": {str(j): amount for j, amount in record.penalties},
            }
            for record in result.summary.trace
        ],
    }
    _atomic_write(out_dir / "selection.json", _json_text(selection))
    if result.scores is not None:
        payload = {
            "aggregate_mode": config.rouge_aggregate,
            "scores": _score_payload(result.scores),
        }
        _atomic_write(out_dir / "rouge.json", _json_text(payload))
    if dump_graph:
        target = out_dir / "W.mtx"
        target.parent.mkdir(parents=True, exist_ok=True)
        scipy_io.mmwrite(str(target), sparse.coo_matrix(result.graph.W))
    if config.debug_dir:
        debug = {
            name: list(vector)
            for name, vector in result.expanded.provenance.items()
        }
        debug["combined"] = list(result.expanded.values)
        _atomic_write(
            Path(config.debug_dir) / f"{result.topic_id}.expansion.json",
            _json_text(debug),
        )


def discover_topics(corpus_dir: str | Path) -> list[Path]:
    corpus = Path(corpus_dir)
    if not corpus.is_dir():
        raise ConfigError(f"corpus directory not found: {corpus}")
    topics = sorted(
        p for p in corpus.iterdir() if p.is_dir() and (p / "query.txt").is_file()
    )
    if not topics:
        raise ConfigError(f"no topics (directories with query.txt) under {corpus}")
    return topics


def load_lexicon(config: PipelineConfig) -> SynsetGraph:
    if not config.wordnet_dir:
        raise ConfigError(
            "no WordNet directory configured (set wordnet_dir or MANIQUERY_WORDNET)"
        )
    return parse_wordnet(config.wordnet_dir)


def aggregate_scores(results: Sequence[TopicResult]) -> dict:
    """Macro-average precision/recall/F1 per metric over scored topics."""
    scored = [r for r in results if r.scores is not None]
    if not scored:
        return {}
    out = {}
    for metric in ALL_METRICS:
        triples = [r.scores[metric] for r in scored]
        out[metric] = Score(
            sum(t.precision for t in triples) / len(triples),
            sum(t.recall for t in triples) / len(triples),
            sum(t.f1 for t in triples) / len(triples),
        )
    return out


def run_pipeline(config: PipelineConfig, dump_graph: bool = False) -> PipelineResult:
    """Process every topic, write artifacts, and produce the macro report.

    Topic failures are isolated: a failing topic is recorded in the report
    and does not stop the others.
    """
    topics = discover_topics(config.corpus_dir)
    lexicon = load_lexicon(config)
    output_root = Path(config.output_dir)

    def run_one(topic_dir: Path):
        result = compute_topic(topic_dir, config, lexicon)
        write_topic_outputs(result, output_root / result.topic_id, config, dump_graph)
        return result

    results: list[TopicResult] = []
    failures: dict[str, str] = {}
    workers = max(1, int(config.workers))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = {pool.submit(run_one, t): t for t in topics}
        for future, topic_dir in futures.items():
            try:
                results.append(future.result())
            except Exception as exc:
                failures[topic_dir.name] = f"{type(exc).__name__}: {exc}"

    results.sort(key=lambda r: r.topic_id)
    aggregate = aggregate_scores(results)
    report = {
        "aggregation": "macro-average over topics",
        "rouge_mode": config.rouge_aggregate,
        "aggregate": _score_payload(aggregate) if aggregate else {},
        "topics": {
            r.topic_id: {
                "selected": list(r.summary.selected),
                "word_count": r.summary.word_count,
                "truncated": r.summary.truncated,
                "scores": _score_payload(r.scores) if r.scores else None,
            }
            for r in results
        },
        "failures": failures,
    }
    output_root.mkdir(parents=True, exist_ok=True)
    _atomic_write(output_root / "report.json", _json_text(report))
    return PipelineResult(tuple(results), failures, aggregate)


SWEEP_HEADER = (
    "value",
    "alpha_cos",
    "alpha_overlap",
    "alpha_peer",
    "r1_f1",
    "r2_f1",
    "rw_f1",
    "rsu4_f1",
)


@dataclass(frozen=True)
class SweepResult:
    parameter: str
    rows: tuple[tuple[str, ...], ...]
    failures: dict

    def to_tsv(self) -> str:
        lines = ["\t".join(SWEEP_HEADER)]
        lines.extend("\t".join(row) for row in self.rows)
        return "\n".join(lines) + "\n"


def _format_number(value: float) -> str:
    return format(value, "g")


def run_sweep(
    config: PipelineConfig, parameter: str, values: Sequence[str]
) -> SweepResult:
    """Run the pipeline once per value of a numeric config key.

    Sweeping ``alpha_overlap`` keeps the cosine weight complementary
    (``alpha_cos = 1 - alpha_overlap``); other parameters change in
    isolation.  Each run writes under ``<output_dir>/sweep-<parameter>-<value>``.
    """
    valid = {field.name for field in dataclasses.fields(PipelineConfig)}
    if parameter not in valid:
        raise ConfigError(f"unknown sweep parameter: {parameter}")
    if not isinstance(getattr(PipelineConfig(), parameter), (int, float)):
        raise ConfigError(f"sweep parameter must be numeric: {parameter}")

    rows = []
    failures: dict[str, str] = {}
    base_output = Path(config.output_dir)
    for raw_value in values:
        run_config = config.with_overrides({parameter: raw_value})
        if parameter == "alpha_overlap":
            run_config = dataclasses.replace(
                run_config, alpha_cos=1.0 - run_config.alpha_overlap
            )
        run_config = dataclasses.replace(
            run_config,
            output_dir=str(base_output / f"sweep-{parameter}-{raw_value}"),
        )
        outcome = run_pipeline(run_config)
        failures.update(
            {f"{raw_value}:{topic}": msg for topic, msg in outcome.failures.items()}
        )
        aggregate = outcome.aggregate
        metric_cells = tuple(
            _format_number(aggregate[m].f1) if m in aggregate else "n/a"
            for m in ALL_METRICS
        )
        rows.append(
            (
                _format_number(getattr(run_config, parameter)),
                _format_number(run_config.alpha_cos),
                _format_number(run_config.alpha_overlap),
                _format_number(run_config.alpha_peer),
            )
            + metric_cells
        )
    return SweepResult(parameter, tuple(rows), failures)
