"""Command-line front end.

Subcommands: disambiguate (write a prediction key file), evaluate (score
predictions against a gold key), oracle (compare against the exhaustive
brute-force search), mcs (first-sense baseline), sweep (grid over window
length and voting depth). Data goes to --output or stdout; diagnostics and
timing go to stderr; exit status is 0 only for a clean run.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .corpus import load_answer_key, load_corpus, load_predictions, mcs_baseline, score
from .errors import ParseError, ResourceLimitError
from .lexicon import load_lexicon, load_stopwords
from .relatedness import EmbeddingMeasure, LeskMeasure, cached, load_vectors
from .shotgun import (DEFAULT_GUARD, Params, RunStats, brute_force_global,
                      build_targets, config_score, shotgun_wsd)


@dataclass
class RunConfig:
    command: str
    input: str | None = None
    output: str | None = None
    lexicon: str | None = None
    corpus_format: str = "canonical"
    measure: str = "embeddings"
    vectors: str | None = None
    vector_format: str = "binary"
    stopwords: str | None = None
    median: str = "geometric"
    params: Params = field(default_factory=Params)
    workers: int = 1
    guard: int = DEFAULT_GUARD
    no_assembly: bool = False
    timing: bool = False
    predictions: str | None = None
    key: str | None = None
    n_values: tuple[int, ...] = ()
    k_values: tuple[int, ...] = ()


def _write_lines(lines, output):
    text = "".join(line + "\n" for line in lines)
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _build_measure(cfg: RunConfig, lex):
    stop = load_stopwords(cfg.stopwords)
    if cfg.measure == "lesk":
        return cached(LeskMeasure(lex, stop))
    store = load_vectors(cfg.vectors, cfg.vector_format)
    return cached(EmbeddingMeasure(lex, store, stop, cfg.median))


def _predict_document(doc, lex, result, predictions):
    """Turn a GlobalConfiguration into key-file entries for the document's
    gold-annotated instances."""
    targets = build_targets(doc, lex)
    for pos_idx, sid in result.assignment.items():
        position = targets[pos_idx]
        if position.instance_id is None:
            continue
        idx = position.senses.index(sid)
        predictions[(doc.id, position.instance_id)] = lex.sense_key(position.entries[idx])


def run_disambiguate(cfg: RunConfig) -> int:
    lex = load_lexicon(cfg.lexicon)
    measure = _build_measure(cfg, lex)
    docs = load_corpus(cfg.input, cfg.corpus_format)
    predictions = {}
    failures = 0
    for doc in docs:
        stats = RunStats()
        t0 = time.perf_counter()
        try:
            result = shotgun_wsd(doc, lex, measure, cfg.params,
                                 workers=cfg.workers, guard=cfg.guard,
                                 stats=stats, assembly=not cfg.no_assembly)
        except ResourceLimitError as exc:
            print(f"document {doc.id}: {exc}", file=sys.stderr)
            failures += 1
            continue
        elapsed = time.perf_counter() - t0
        _predict_document(doc, lex, result, predictions)
        if cfg.timing:
            phases = " ".join(f"{name}={secs:.3f}s"
                              for name, secs in stats.phase_seconds.items())
            print(f"document {doc.id}: {elapsed:.3f}s windows={stats.windows} "
                  f"pool={stats.pool_size} {phases}", file=sys.stderr)
    _write_lines((f"{d} {i} {k}" for (d, i), k in predictions.items()), cfg.output)
    return 1 if failures else 0


def run_mcs(cfg: RunConfig) -> int:
    lex = load_lexicon(cfg.lexicon)
    docs = load_corpus(cfg.input, cfg.corpus_format)
    predictions = {}
    for doc in docs:
        for instance_id, key in mcs_baseline(doc, lex).items():
            predictions[(doc.id, instance_id)] = key
    _write_lines((f"{d} {i} {k}" for (d, i), k in predictions.items()), cfg.output)
    return 0


def run_evaluate(cfg: RunConfig) -> int:
    preds = load_predictions(cfg.predictions)
    key = load_answer_key(cfg.key)
    rep = score(preds, key)
    _write_lines([
        "attempted\ttotal\tcorrect\tunknown\tprecision\trecall\tf1",
        f"{rep.attempted}\t{rep.total}\t{rep.correct}\t{rep.unknown}\t"
        f"{rep.precision * 100:.2f}%\t{rep.recall * 100:.2f}%\t{rep.f1 * 100:.2f}%",
    ], cfg.output)
    return 0


def run_oracle(cfg: RunConfig) -> int:
    lex = load_lexicon(cfg.lexicon)
    measure = _build_measure(cfg, lex)
    docs = load_corpus(cfg.input, cfg.corpus_format)
    lines = ["doc\tpositions\tagreement\tshotgun_score\toracle_score"]
    for doc in docs:
        targets = build_targets(doc, lex)
        m = len(targets)
        oracle = brute_force_global(doc, lex, measure, guard=cfg.guard)
        shot = shotgun_wsd(doc, lex, measure, cfg.params,
                           workers=cfg.workers, guard=cfg.guard,
                           assembly=not cfg.no_assembly)
        agree = sum(1 for i in range(m) if oracle.assignment[i] == shot.assignment[i])
        rate = agree / m if m else 1.0
        shot_score = config_score([shot.assignment[i] for i in range(m)], measure)
        oracle_score = config_score([oracle.assignment[i] for i in range(m)], measure)
        lines.append(f"{doc.id}\t{m}\t{rate * 100:.2f}%\t"
                     f"{shot_score:.6f}\t{oracle_score:.6f}")
    _write_lines(lines, cfg.output)
    return 0


def run_sweep(cfg: RunConfig) -> int:
    lex = load_lexicon(cfg.lexicon)
    measure = _build_measure(cfg, lex)
    docs = load_corpus(cfg.input, cfg.corpus_format)
    key = load_answer_key(cfg.key)
    lines = ["n\tk\tattempted\ttotal\tcorrect\tprecision\trecall\tf1\tseconds"]
    for n in cfg.n_values:
        for k in cfg.k_values:
            params = Params(n=n, k=k, c=cfg.params.c)
            t0 = time.perf_counter()
            predictions = {}
            for doc in docs:
                result = shotgun_wsd(doc, lex, measure, params,
                                     workers=cfg.workers, guard=cfg.guard,
                                     assembly=not cfg.no_assembly)
                _predict_document(doc, lex, result, predictions)
            elapsed = time.perf_counter() - t0
            rep = score(predictions, key)
            lines.append(f"{n}\t{k}\t{rep.attempted}\t{rep.total}\t{rep.correct}\t"
                         f"{rep.precision * 100:.2f}%\t{rep.recall * 100:.2f}%\t"
                         f"{rep.f1 * 100:.2f}%\t{elapsed:.3f}")
    _write_lines(lines, cfg.output)
    return 0


_HANDLERS = {
    "disambiguate": run_disambiguate,
    "evaluate": run_evaluate,
    "oracle": run_oracle,
    "mcs": run_mcs,
    "sweep": run_sweep,
}


def _add_corpus_args(p):
    p.add_argument("input", help="corpus file")
    p.add_argument("--lexicon", required=True,
                   help="toy lexicon file or WordNet database directory")
    p.add_argument("--format", choices=("canonical", "senseval"), default="canonical",
                   help="corpus input format (default: canonical)")


def _add_measure_args(p):
    p.add_argument("--measure", choices=("lesk", "embeddings"), default="embeddings",
                   help="relatedness measure (default: embeddings)")
    p.add_argument("--vectors", help="word-vector file (required for embeddings)")
    p.add_argument("--vector-format", choices=("binary", "text"), default="binary")
    p.add_argument("--stopwords", help="stopword file overriding the built-in list")
    p.add_argument("--median", choices=("geometric", "coordinate"), default="geometric",
                   help="sense-centroid construction (default: geometric)")
    p.add_argument("--window-length", "-n", type=int, default=8, metavar="N")
    p.add_argument("--top-k", "-k", type=int, default=15, metavar="K")
    p.add_argument("--candidates", "-c", type=int, default=20, metavar="C",
                   help="configurations kept per window (default: 20)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--guard", type=int, default=DEFAULT_GUARD,
                   help="max sense combinations enumerated per window")
    p.add_argument("--no-assembly", action="store_true",
                   help="skip the configuration merge phase (ablation)")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="shotgunwsd",
        description="Window-based brute-force word sense disambiguation.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("disambiguate", help="write a prediction key file")
    _add_corpus_args(p)
    _add_measure_args(p)
    p.add_argument("--timing", action="store_true",
                   help="report per-document and per-phase wall time on stderr")
    p.add_argument("--output", "-o")

    p = sub.add_parser("evaluate", help="score a prediction file against a gold key")
    p.add_argument("predictions")
    p.add_argument("key")
    p.add_argument("--output", "-o")

    p = sub.add_parser("oracle", help="compare against exhaustive global search")
    _add_corpus_args(p)
    _add_measure_args(p)
    p.add_argument("--output", "-o")

    p = sub.add_parser("mcs", help="first-listed-sense baseline key file")
    _add_corpus_args(p)
    p.add_argument("--output", "-o")

    p = sub.add_parser("sweep", help="grid over window length and voting depth")
    _add_corpus_args(p)
    _add_measure_args(p)
    p.add_argument("key", help="gold key file")
    p.add_argument("--n-values", required=True, help="comma-separated window lengths")
    p.add_argument("--k-values", required=True, help="comma-separated voting depths")
    p.add_argument("--output", "-o")

    return parser


def _int_list(text, parser, flag):
    try:
        values = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        parser.error(f"{flag} expects comma-separated integers, got {text!r}")
    if not values:
        parser.error(f"{flag} is empty")
    return values


def _config_from_args(args, parser) -> RunConfig:
    cfg = RunConfig(command=args.command, output=getattr(args, "output", None))
    if cfg.command in ("disambiguate", "oracle", "mcs", "sweep"):
        cfg.input = args.input
        cfg.lexicon = args.lexicon
        cfg.corpus_format = args.format
    if cfg.command in ("disambiguate", "oracle", "sweep"):
        cfg.measure = args.measure
        cfg.vectors = args.vectors
        cfg.vector_format = args.vector_format
        cfg.stopwords = args.stopwords
        cfg.median = args.median
        cfg.workers = args.workers
        cfg.guard = args.guard
        cfg.no_assembly = args.no_assembly
        if cfg.measure == "embeddings" and not cfg.vectors:
            parser.error("--measure embeddings requires --vectors")
        try:
            cfg.params = Params(n=args.window_length, k=args.top_k, c=args.candidates)
        except ValueError as exc:
            parser.error(str(exc))
    if cfg.command == "disambiguate":
        cfg.timing = args.timing
    if cfg.command == "evaluate":
        cfg.predictions = args.predictions
        cfg.key = args.key
    if cfg.command == "sweep":
        cfg.key = args.key
        cfg.n_values = _int_list(args.n_values, parser, "--n-values")
        cfg.k_values = _int_list(args.k_values, parser, "--k-values")
    return cfg


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    cfg = _config_from_args(args, parser)
    try:
        return _HANDLERS[cfg.command](cfg)
    except (ParseError, ResourceLimitError, OSError, ValueError, LookupError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
