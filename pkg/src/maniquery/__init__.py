"""Query-focused extractive multi-document summarization.

Sentence scoring is done by manifold ranking over a three-term sentence
similarity graph; the query row is first enriched by four expansion
mechanisms (WordNet synonyms, mean, variance and biased TextRank). A ROUGE
evaluator and a batch CLI round out the package.
"""

from maniquery.corpus import (
    SentenceWordMatrix,
    TfIsfVectorizer,
    Topic,
    build_matrix,
    load_models,
    load_topic,
)
from maniquery.errors import (
    ConfigError,
    DimensionMismatchError,
    DisconnectedSynsetsError,
    EmptyRankingError,
    EmptyTopicError,
    InvalidAlphaError,
    ManiqueryError,
    MissingWordNetFileError,
    NonConvergenceError,
    TooFewRowsError,
    UnknownSynsetError,
    WordNetParseError,
)
from maniquery.expansion import (
    ExpandedQuery,
    ExpansionConfig,
    QueryExpander,
    combine_expansions,
    expand_mean,
    expand_query,
    expand_simword,
    expand_textrank,
    expand_variance,
    replace_query_row,
)
from maniquery.pipeline import (
    PipelineConfig,
    PipelineResult,
    compute_topic,
    run_pipeline,
    run_sweep,
)
from maniquery.ranking import (
    BiasedTextRank,
    ManifoldRanker,
    RankVector,
    manifold_rank,
    textrank_scores,
)
from maniquery.rouge import Score, compute_rouge, evaluate_summary, rouge_tokenize
from maniquery.simgraph import GraphWeights, SimilarityGraph, build_graph
from maniquery.summarize import Summary, extract_summary
from maniquery.wordnet import (
    SynsetGraph,
    WordSimMatrix,
    build_word_sim_matrix,
    parse_wordnet,
    word_similarity,
)

__version__ = "0.1.0"

__all__ = [
    "BiasedTextRank",
    "ConfigError",
    "DimensionMismatchError",
    "DisconnectedSynsetsError",
    "EmptyRankingError",
    "EmptyTopicError",
    "ExpandedQuery",
    "ExpansionConfig",
    "GraphWeights",
    "InvalidAlphaError",
    "ManifoldRanker",
    "ManiqueryError",
    "MissingWordNetFileError",
    "NonConvergenceError",
    "PipelineConfig",
    "PipelineResult",
    "QueryExpander",
    "RankVector",
    "Score",
    "SentenceWordMatrix",
    "SimilarityGraph",
    "Summary",
    "SynsetGraph",
    "TfIsfVectorizer",
    "TooFewRowsError",
    "Topic",
    "UnknownSynsetError",
    "WordNetParseError",
    "WordSimMatrix",
    "__version__",
    "build_graph",
    "build_matrix",
    "build_word_sim_matrix",
    "combine_expansions",
    "compute_rouge",
    "compute_topic",
    "evaluate_summary",
    "expand_mean",
    "expand_query",
    "expand_simword",
    "expand_textrank",
    "expand_variance",
    "extract_summary",
    "load_models",
    "load_topic",
    "manifold_rank",
    "parse_wordnet",
    "replace_query_row",
    "rouge_tokenize",
    "run_pipeline",
    "run_sweep",
    "textrank_scores",
    "word_similarity",
]
