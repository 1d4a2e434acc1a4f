"""Command-line interface.

Subcommands: ``summarize`` runs the batch pipeline over a corpus directory,
``rouge`` scores a candidate file against a directory of references,
``sweep`` repeats the pipeline across values of one numeric parameter, and
``dump-matrix`` writes one topic's sentence graph in Matrix Market format.

Exit codes: 0 on success, 1 when any topic failed, 2 on configuration
errors.  The ``MANIQUERY_WORDNET`` environment variable supplies the WordNet
directory when neither the config file nor ``--wordnet`` does.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from scipy import io as scipy_io
from scipy import sparse

from .errors import ConfigError, ManiqueryError
from .pipeline import (
    PipelineConfig,
    compute_topic,
    load_lexicon,
    run_pipeline,
    run_sweep,
)
from .rouge import ALL_METRICS, evaluate_summary

WORDNET_ENV = "MANIQUERY_WORDNET"


def _add_pipeline_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--corpus", help="corpus root (one directory per topic)")
    parser.add_argument("--wordnet", help="WordNet database directory")
    parser.add_argument("--output", help="output root directory")
    parser.add_argument("--config", help="flat key = value config file")
    parser.add_argument("--debug-dir", help="directory for expansion dumps")
    parser.add_argument("--workers", type=int, help="worker pool size")
    parser.add_argument(
        "--expansions",
        help='comma list from {simword,mean,variance,textrank}; "" disables all',
    )
    parser.add_argument(
        "--set",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="override any config key (repeatable)",
    )


def _build_config(args: argparse.Namespace) -> PipelineConfig:
    config = (
        PipelineConfig.from_file(args.config) if args.config else PipelineConfig()
    )
    overrides: dict[str, str] = {}
    for item in args.set:
        if "=" not in item:
            raise ConfigError(f"--set expects KEY=VALUE, got {item!r}")
        key, value = item.split("=", 1)
        overrides[key.strip()] = value.strip()
    config = config.with_overrides(overrides)

    direct = {
        "corpus_dir": args.corpus,
        "wordnet_dir": args.wordnet,
        "output_dir": args.output,
        "debug_dir": args.debug_dir,
        "workers": args.workers,
        "expansions": args.expansions,
    }
    config = config.with_overrides(
        {key: str(value) for key, value in direct.items() if value is not None}
    )
    if not config.wordnet_dir and os.environ.get(WORDNET_ENV):
        config = config.with_overrides({"wordnet_dir": os.environ[WORDNET_ENV]})
    return config


def _print_report(result) -> None:
    for topic in result.results:
        line = f"{topic.topic_id}\twords={topic.summary.word_count}"
        if topic.scores:
            line += "".join(
                f"\t{metric}={topic.scores[metric].f1:.5f}" for metric in ALL_METRICS
            )
        print(line)
    for topic_id, message in sorted(result.failures.items()):
        print(f"{topic_id}\tFAILED\t{message}", file=sys.stderr)
    if result.aggregate:
        line = "macro-average"
        line += "".join(
            f"\t{metric}={result.aggregate[metric].f1:.5f}" for metric in ALL_METRICS
        )
        print(line)


def cmd_summarize(args: argparse.Namespace) -> int:
    config = _build_config(args)
    result = run_pipeline(config, dump_graph=args.dump_graph)
    _print_report(result)
    return 1 if result.failures else 0


def cmd_rouge(args: argparse.Namespace) -> int:
    candidate_path = Path(args.cand)
    if not candidate_path.is_file():
        raise ConfigError(f"candidate file not found: {candidate_path}")
    refs_dir = Path(args.refs)
    if not refs_dir.is_dir():
        raise ConfigError(f"references directory not found: {refs_dir}")
    reference_paths = sorted(refs_dir.glob("*.txt"))
    if not reference_paths:
        raise ConfigError(f"no *.txt references under {refs_dir}")
    metrics = [m.strip() for m in args.metrics.split(",") if m.strip()]
    unknown = set(metrics) - set(ALL_METRICS)
    if unknown:
        raise ConfigError(f"unknown metrics: {sorted(unknown)}")

    scores = evaluate_summary(
        candidate_path.read_text(encoding="utf-8"),
        [p.read_text(encoding="utf-8") for p in reference_paths],
        metrics=metrics,
        aggregate=args.aggregate,
    )
    for metric in metrics:
        score = scores[metric]
        print(
            f"{metric}\tprecision={score.precision:.5f}"
            f"\trecall={score.recall:.5f}\tf1={score.f1:.5f}"
        )
    if args.json:
        payload = {
            "aggregate_mode": args.aggregate,
            "candidate": str(candidate_path),
            "references": [str(p) for p in reference_paths],
            "scores": {
                metric: {
                    "precision": score.precision,
                    "recall": score.recall,
                    "f1": score.f1,
                }
                for metric, score in scores.items()
            },
        }
        out = Path(args.json)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    config = _build_config(args)
    values = [v.strip() for v in args.values.split(",") if v.strip()]
    sweep = run_sweep(config, args.param, values)
    sys.stdout.write(sweep.to_tsv())
    for key, message in sorted(sweep.failures.items()):
        print(f"{key}\tFAILED\t{message}", file=sys.stderr)
    return 1 if sweep.failures else 0


def cmd_dump_matrix(args: argparse.Namespace) -> int:
    config = _build_config(args)
    topic_dir = Path(config.corpus_dir) / args.topic
    if not (topic_dir / "query.txt").is_file():
        raise ConfigError(f"topic not found: {topic_dir}")
    lexicon = load_lexicon(config)
    result = compute_topic(topic_dir, config, lexicon)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    scipy_io.mmwrite(str(out), sparse.coo_matrix(result.graph.W))
    print(f"wrote {out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maniquery",
        description="Query-focused extractive multi-document summarizer.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sum = sub.add_parser("summarize", help="run the pipeline over a corpus")
    _add_pipeline_options(p_sum)
    p_sum.add_argument(
        "--dump-graph",
        action="store_true",
        help="also write each topic's W in Matrix Market format",
    )
    p_sum.set_defaults(func=cmd_summarize)

    p_rouge = sub.add_parser("rouge", help="score a candidate against references")
    p_rouge.add_argument("--cand", required=True, help="candidate summary file")
    p_rouge.add_argument("--refs", required=True, help="directory of *.txt references")
    p_rouge.add_argument(
        "--metrics", default=",".join(ALL_METRICS), help="comma list of metrics"
    )
    p_rouge.add_argument(
        "--aggregate",
        default="average",
        choices=("average", "micro", "jackknife"),
        help="multi-reference aggregation mode",
    )
    p_rouge.add_argument("--json", help="also write scores to this JSON file")
    p_rouge.set_defaults(func=cmd_rouge)

    p_sweep = sub.add_parser("sweep", help="run the pipeline across parameter values")
    _add_pipeline_options(p_sweep)
    p_sweep.add_argument("--param", required=True, help="numeric config key to sweep")
    p_sweep.add_argument(
        "--values", required=True, help="comma list of values (may be empty)"
    )
    p_sweep.set_defaults(func=cmd_sweep)

    p_dump = sub.add_parser("dump-matrix", help="write one topic's sentence graph")
    _add_pipeline_options(p_dump)
    p_dump.add_argument("--topic", required=True, help="topic directory name")
    p_dump.add_argument("--out", required=True, help="target .mtx path")
    p_dump.set_defaults(func=cmd_dump_matrix)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except ManiqueryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
