"""Core disambiguation algorithm.

Slide a fixed-length window over the sense-bearing positions of a
document; inside each window, score every combination of senses (sum of
pairwise relatedness) and keep the top c; merge configurations whose
sense suffix/prefix overlap agrees into longer ones; assign each position
the sense winning a majority vote among the k longest configurations
covering it. Everything is deterministic: ties always resolve toward
earlier window starts and lower sense numbers.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import prod

import numpy as np

from . import kernels
from .corpus import CONTENT_POS, POS, Document
from .errors import ResourceLimitError
from .lexicon import Lexicon, SenseEntry, SynsetId

DEFAULT_GUARD = 10 ** 8


@dataclass(frozen=True)
class Params:
    n: int = 8
    k: int = 15
    c: int = 20

    def __post_init__(self):
        if self.n <= 1:
            raise ValueError(f"window length n must be > 1, got {self.n}")
        if self.k <= 0:
            raise ValueError(f"voting depth k must be > 0, got {self.k}")
        if self.c <= 0:
            raise ValueError(f"kept-configuration count c must be > 0, got {self.c}")


@dataclass(frozen=True)
class TargetPosition:
    token_index: int
    lemma: str
    pos: POS
    senses: tuple[SynsetId, ...]
    entries: tuple[SenseEntry, ...]
    instance_id: str | None


@dataclass(frozen=True)
class TargetSequence:
    positions: tuple[TargetPosition, ...]

    def __len__(self):
        return len(self.positions)

    def __getitem__(self, i):
        return self.positions[i]

    def __iter__(self):
        return iter(self.positions)


@dataclass(frozen=True)
class WindowConfiguration:
    """One sense choice per covered position. indices are the per-position
    sense-list indices behind senses; they drive all lexicographic
    tie-breaking."""

    senses: tuple[SynsetId, ...]
    indices: tuple[int, ...]
    start: int
    score: float

    @property
    def length(self):
        return len(self.senses)


@dataclass(frozen=True)
class GlobalConfiguration:
    assignment: dict[int, SynsetId]


@dataclass
class RunStats:
    windows: int = 0
    per_window_enumerated: list[int] = field(default_factory=list)
    per_window_product: list[int] = field(default_factory=list)
    merged_added: int = 0
    pool_size: int = 0
    phase_seconds: dict[str, float] = field(default_factory=dict)


def build_targets(doc: Document, lex: Lexicon) -> TargetSequence:
    """Document tokens that can carry a sense: content POS and at least
    one lexicon sense. Everything else occupies no window slot."""
    positions = []
    for idx, token in enumerate(doc.tokens):
        if token.pos not in CONTENT_POS:
            continue
        entries = lex.senses_of(token.lemma, token.pos)
        if not entries:
            continue
        positions.append(TargetPosition(
            token_index=idx,
            lemma=token.lemma,
            pos=token.pos,
            senses=tuple(e.synset for e in entries),
            entries=tuple(entries),
            instance_id=token.instance_id,
        ))
    return TargetSequence(tuple(positions))


def config_score(senses, measure) -> float:
    """Sum of measure over all unordered position pairs; the score
    definition every configuration must satisfy."""
    total = 0.0
    n = len(senses)
    for p in range(n):
        for q in range(p + 1, n):
            total += measure(senses[p], senses[q])
    return total


def _enumerate_raw(targets, start, n, measure, c, guard):
    positions = targets.positions[start:start + n]
    counts = [len(p.senses) for p in positions]
    product = prod(counts)
    if product > guard:
        raise ResourceLimitError(
            f"window at position {start}: {product} sense configurations "
            f"exceed the enumeration guard ({guard})")

    pair_base = np.zeros(n * n, dtype=np.int64)
    offset = 0
    for p in range(n):
        for q in range(p + 1, n):
            pair_base[p * n + q] = offset
            offset += counts[p] * counts[q]
    pair_flat = np.empty(offset, dtype=np.float64)
    i = 0
    for p in range(n):
        for q in range(p + 1, n):
            for sp in positions[p].senses:
                for sq in positions[q].senses:
                    pair_flat[i] = measure(sp, sq)
                    i += 1

    digits, scores, enumerated = kernels.enumerate_topc(
        np.asarray(counts, dtype=np.int32), pair_base, pair_flat, c)
    configs = [
        WindowConfiguration(
            senses=tuple(positions[t].senses[d[t]] for t in range(n)),
            indices=tuple(d),
            start=start,
            score=s,
        )
        for d, s in zip(digits, scores)
    ]
    return configs, int(enumerated), product


def enumerate_window(targets: TargetSequence, start: int, n: int, measure,
                     c: int, guard: int = DEFAULT_GUARD,
                     stats: RunStats | None = None) -> list[WindowConfiguration]:
    """Top c sense configurations of the window at `start`, best first.

    Conceptually scores the full Cartesian product of the window's sense
    lists; the kernel does so with incremental prefix sums but returns
    exactly the full-enumeration result. Ties rank lower sense indices
    first. Product sizes beyond `guard` raise instead of pruning.
    """
    configs, enumerated, product = _enumerate_raw(targets, start, n, measure, c, guard)
    if stats is not None:
        stats.windows += 1
        stats.per_window_enumerated.append(enumerated)
        stats.per_window_product.append(product)
    return configs


def assemble(pool, n: int, measure) -> list[WindowConfiguration]:
    """Merge suffix/prefix-compatible configurations into longer ones.

    For overlap length l = min(4, n-1) down to 1: whenever P's last l
    senses equal Q's first l senses and the spans align positionally
    (Q.start - P.start = P.length - l), the concatenation joins the pool
    with a freshly computed pair-sum score, deduplicated by
    (senses, start); repeat at each l until nothing new appears. Returns
    originals plus merges.
    """
    pool = list(pool)
    seen = {(cfg.senses, cfg.start) for cfg in pool}
    by_start: dict[int, list[WindowConfiguration]] = {}
    for cfg in pool:
        by_start.setdefault(cfg.start, []).append(cfg)

    for l in range(min(4, n - 1), 0, -1):
        while True:
            added = []
            for P in pool:
                bucket = by_start.get(P.start + P.length - l)
                if not bucket:
                    continue
                tail = P.senses[-l:]
                for Q in bucket:
                    if Q.senses[:l] != tail:
                        continue
                    merged_senses = P.senses + Q.senses[l:]
                    key = (merged_senses, P.start)
                    if key in seen:
                        continue
                    seen.add(key)
                    added.append(WindowConfiguration(
                        senses=merged_senses,
                        indices=P.indices + Q.indices[l:],
                        start=P.start,
                        score=config_score(merged_senses, measure),
                    ))
            if not added:
                break
            pool.extend(added)
            for cfg in added:
                by_start.setdefault(cfg.start, []).append(cfg)
    return pool


def vote(pool, position: int, k: int) -> SynsetId:
    """Majority vote at one position among the k best covering
    configurations (longest first, then higher score, earlier start,
    lower sense indices). Vote ties go to the larger summed supporter
    score, then the smaller sense number."""
    covering = [cfg for cfg in pool
                if cfg.start <= position < cfg.start + cfg.length]
    if not covering:
        raise ValueError(f"no configuration covers position {position}")
    covering.sort(key=lambda cfg: (-cfg.length, -cfg.score, cfg.start, cfg.indices))
    tallies: dict[int, list] = {}
    for cfg in covering[:k]:
        offset = position - cfg.start
        idx = cfg.indices[offset]
        entry = tallies.get(idx)
        if entry is None:
            tallies[idx] = [1, cfg.score, cfg.senses[offset]]
        else:
            entry[0] += 1
            entry[1] += cfg.score
    winner = min(tallies.items(), key=lambda kv: (-kv[1][0], -kv[1][1], kv[0]))
    return winner[1][2]


def shotgun_wsd(doc: Document, lex: Lexicon, measure, params: Params = Params(),
                workers: int = 1, guard: int = DEFAULT_GUARD,
                stats: RunStats | None = None,
                assembly: bool = True) -> GlobalConfiguration:
    """Run the full pipeline on one document.

    Documents with at most n target positions collapse to a single window
    of their full length (pure brute force over that span). The result is
    a pure function of the inputs; worker count only changes wall time.
    """
    targets = build_targets(doc, lex)
    m = len(targets)
    if m == 0:
        return GlobalConfiguration({})
    n_eff = params.n if m > params.n else m
    starts = range(m - n_eff + 1)

    t0 = time.perf_counter()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(
                lambda s: _enumerate_raw(targets, s, n_eff, measure, params.c, guard),
                starts))
    else:
        results = [_enumerate_raw(targets, s, n_eff, measure, params.c, guard)
                   for s in starts]
    pool = []
    for configs, enumerated, product in results:
        pool.extend(configs)
        if stats is not None:
            stats.windows += 1
            stats.per_window_enumerated.append(enumerated)
            stats.per_window_product.append(product)
    t1 = time.perf_counter()

    base_size = len(pool)
    if assembly:
        pool = assemble(pool, n_eff, measure)
    if stats is not None:
        stats.merged_added += len(pool) - base_size
        stats.pool_size = len(pool)
    t2 = time.perf_counter()

    assignment = {pos: vote(pool, pos, params.k) for pos in range(m)}
    t3 = time.perf_counter()

    if stats is not None:
        stats.phase_seconds["enumeration"] = stats.phase_seconds.get("enumeration", 0.0) + (t1 - t0)
        stats.phase_seconds["assembly"] = stats.phase_seconds.get("assembly", 0.0) + (t2 - t1)
        stats.phase_seconds["voting"] = stats.phase_seconds.get("voting", 0.0) + (t3 - t2)
    return GlobalConfiguration(assignment)


def shotgun_wsd_no_assembly(doc: Document, lex: Lexicon, measure,
                            params: Params = Params(), **kwargs) -> GlobalConfiguration:
    """Ablation: identical pipeline with the merge phase skipped."""
    return shotgun_wsd(doc, lex, measure, params, assembly=False, **kwargs)


def brute_force_global(doc: Document, lex: Lexicon, measure,
                       guard: int = DEFAULT_GUARD) -> GlobalConfiguration:
    """Exhaustive argmax of config_score over the whole document; the
    oracle the windowed search approximates. Ties keep the lexicographically
    first sense-index assignment."""
    targets = build_targets(doc, lex)
    m = len(targets)
    if m == 0:
        return GlobalConfiguration({})
    product = prod(len(p.senses) for p in targets)
    if product > guard:
        raise ResourceLimitError(
            f"{product} global sense configurations exceed the guard ({guard})")
    best_score = None
    best_senses = None
    for digits in itertools.product(*(range(len(p.senses)) for p in targets)):
        senses = tuple(targets[t].senses[digits[t]] for t in range(m))
        s = config_score(senses, measure)
        if best_score is None or s > best_score:
            best_score = s
            best_senses = senses
    return GlobalConfiguration(dict(enumerate(best_senses)))
