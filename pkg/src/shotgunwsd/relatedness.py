"""Semantic relatedness between synsets.

Two interchangeable measures behind one callable contract
(SynsetId, SynsetId) -> float: gloss overlap (squared lengths of maximal
common stem runs between relation-expanded disambiguation texts) and
cosine similarity of sense centroids built from pre-trained word vectors.
Both are symmetric and deterministic; `cached` wraps either with an
unordered-pair memo that makes window enumeration tractable.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ParseError
from .lexicon import (Lexicon, SynsetId, build_disamb_vocabulary, load_stopwords,
                      own_disamb_vocabulary)


def lesk_overlap(seq_a, seq_b) -> int:
    """Iterated longest-common-run overlap between two stem sequences.

    Each round finds a longest common contiguous run (ties: smallest start
    in seq_a, then in seq_b), replaces it in both sequences with fresh
    distinct markers, and adds length squared; rounds continue until the
    sequences share nothing.
    """
    table: dict = {}
    ids_a = [table.setdefault(tok, len(table)) for tok in seq_a]
    ids_b = [table.setdefault(tok, len(table)) for tok in seq_b]
    return int(kernels.lesk_overlap_ids(ids_a, ids_b))


class LeskMeasure:
    """Gloss-overlap relatedness over a fixed lexicon.

    Per-synset stem sequences are built once, interned to integer ids, and
    cached. Same-POS pairs compare relation-expanded texts; cross-POS
    pairs compare only each synset's own lemmas/gloss/examples.
    """

    def __init__(self, lex: Lexicon, stopwords=None):
        self._lex = lex
        self._stop = stopwords if stopwords is not None else load_stopwords()
        self._ids: dict[str, int] = {}
        self._ids_lock = threading.Lock()
        self._expanded: dict[SynsetId, tuple] = {}
        self._own: dict[SynsetId, tuple] = {}

    def _intern(self, stem):
        v = self._ids.get(stem)
        if v is None:
            with self._ids_lock:
                v = self._ids.get(stem)
                if v is None:
                    v = len(self._ids)
                    self._ids[stem] = v
        return v

    def _texts(self, sid, expanded):
        cache = self._expanded if expanded else self._own
        got = cache.get(sid)
        if got is None:
            syn = self._lex.synset(sid)
            if syn is None:
                raise LookupError(f"unknown synset {sid}")
            if expanded:
                vocab = build_disamb_vocabulary(self._lex, syn, self._stop)
            else:
                vocab = own_disamb_vocabulary(syn, self._stop)
            got = tuple(tuple(self._intern(s) for s in seq) for seq in vocab.sequences)
            cache[sid] = got
        return got

    def __call__(self, a: SynsetId, b: SynsetId) -> float:
        expanded = a.pos == b.pos
        texts_a = self._texts(a, expanded)
        texts_b = self._texts(b, expanded)
        total = 0
        for ta in texts_a:
            for tb in texts_b:
                total += kernels.lesk_overlap_ids(ta, tb)
        return float(total)


def lesk_relatedness(lex: Lexicon, a: SynsetId, b: SynsetId, stopwords=None) -> int:
    return int(LeskMeasure(lex, stopwords)(a, b))


class VectorStore:
    """Word vectors of one fixed dimension. Lookup is case-sensitive with
    a lowercase fallback."""

    def __init__(self, dimension: int, vectors: dict):
        self.dimension = int(dimension)
        self._vectors = dict(vectors)

    def __len__(self):
        return len(self._vectors)

    def __contains__(self, word):
        return self.get(word) is not None

    def get(self, word: str):
        v = self._vectors.get(word)
        if v is None:
            v = self._vectors.get(word.lower())
        return v

    def words(self):
        return self._vectors.keys()


def load_vectors(path, format: str = "binary") -> VectorStore:
    """Read the classic word-vector file formats.

    binary: header line `vocab dim\\n`, then per word its bytes up to a
    space followed by dim little-endian float32 values (an optional
    newline after the values is tolerated). text: header line, then one
    `word v1 .. vdim` line per word. Duplicates keep the first entry.
    """
    if format == "binary":
        return _load_binary_vectors(path)
    if format == "text":
        return _load_text_vectors(path)
    raise ValueError(f"unknown vector format {format!r}")


def _load_binary_vectors(path):
    with open(path, "rb") as f:
        header = f.readline()
        try:
            vocab_size, dim = (int(x) for x in header.split())
        except ValueError:
            raise ParseError("malformed vector header", path=path, line=1) from None
        vectors = {}
        for i in range(vocab_size):
            word_bytes = bytearray()
            while True:
                ch = f.read(1)
                if not ch:
                    raise ParseError(
                        f"truncated at byte {f.tell()} reading word {i + 1} of {vocab_size}",
                        path=path)
                if ch == b" ":
                    break
                if ch in (b"\n", b"\r") and not word_bytes:
                    continue  # writers that newline-terminate each entry
                word_bytes += ch
            raw = f.read(4 * dim)
            if len(raw) != 4 * dim:
                raise ParseError(
                    f"truncated at byte {f.tell()}: expected {4 * dim} vector bytes",
                    path=path)
            word = word_bytes.decode("utf-8", errors="replace")
            if word not in vectors:
                vectors[word] = np.frombuffer(raw, dtype="<f4")
    return VectorStore(dim, vectors)


def _load_text_vectors(path):
    with open(path, encoding="utf-8", errors="replace") as f:
        header = f.readline()
        try:
            vocab_size, dim = (int(x) for x in header.split())
        except ValueError:
            raise ParseError("malformed vector header", path=path, line=1) from None
        vectors = {}
        seen = 0
        for lineno, line in enumerate(f, 2):
            if not line.strip():
                continue
            fields = line.split()
            if len(fields) != dim + 1:
                raise ParseError(f"expected {dim + 1} fields, found {len(fields)}",
                                 path=path, line=lineno)
            seen += 1
            word = fields[0]
            if word in vectors:
                continue
            try:
                vectors[word] = np.array([float(x) for x in fields[1:]], dtype="<f4")
            except ValueError:
                raise ParseError("non-numeric vector component",
                                 path=path, line=lineno) from None
        if seen != vocab_size:
            raise ParseError(f"header declares {vocab_size} entries, file has {seen}",
                             path=path)
    return VectorStore(dim, vectors)


def write_vectors(path, vectors: dict, format: str = "binary"):
    """Inverse of load_vectors; handy for building test fixtures and for
    subsetting large vector files."""
    items = list(vectors.items())
    if not items:
        raise ValueError("refusing to write an empty vector file")
    dim = len(next(iter(vectors.values())))
    if format == "binary":
        with open(path, "wb") as f:
            f.write(f"{len(items)} {dim}\n".encode())
            for word, vec in items:
                arr = np.asarray(vec, dtype="<f4")
                if arr.shape != (dim,):
                    raise ValueError(f"vector for {word!r} has shape {arr.shape}")
                f.write(word.encode("utf-8") + b" " + arr.tobytes() + b"\n")
    elif format == "text":
        with open(path, "w", encoding="utf-8") as f:
            f.write(f"{len(items)} {dim}\n")
            for word, vec in items:
                arr = np.asarray(vec, dtype="<f4")
                if arr.shape != (dim,):
                    raise ValueError(f"vector for {word!r} has shape {arr.shape}")
                f.write(word + " " + " ".join(str(float(x)) for x in arr) + "\n")
    else:
        raise ValueError(f"unknown vector format {format!r}")


def geometric_median(points, method: str = "geometric") -> np.ndarray:
    """Point minimizing the sum of Euclidean distances (Weiszfeld).

    Starts from the arithmetic mean; stops when the iterate moves less
    than 1e-6 or after 128 rounds; an iterate landing on an input point
    (distance < 1e-12) is returned as-is. One or two points reduce to the
    mean. method="coordinate" switches to the coordinate-wise median.
    """
    try:
        pts = np.asarray(points, dtype=np.float64)
    except ValueError:
        raise ValueError("expected a list of equal-length vectors") from None
    if pts.size == 0:
        raise ValueError("geometric_median needs at least one point")
    if pts.ndim != 2:
        raise ValueError(f"expected a list of equal-length vectors, got shape {pts.shape}")
    if method == "coordinate":
        return np.median(pts, axis=0)
    if method != "geometric":
        raise ValueError(f"unknown median method {method!r}")
    if len(pts) <= 2:
        return pts.mean(axis=0)
    x = pts.mean(axis=0)
    for _ in range(128):
        diff = pts - x
        dist = np.sqrt((diff * diff).sum(axis=1))
        nearest = int(dist.argmin())
        if dist[nearest] < 1e-12:
            return pts[nearest].copy()
        w = 1.0 / dist
        x_next = (pts * w[:, None]).sum(axis=0) / w.sum()
        moved = float(np.sqrt(((x_next - x) ** 2).sum()))
        x = x_next
        if moved < 1e-6:
            break
    return x


@dataclass(frozen=True)
class SenseCentroid:
    synset: SynsetId
    vector: np.ndarray
    support: int


def embed_centroid(lex: Lexicon, store: VectorStore, s: SynsetId,
                   stopwords=None, median: str = "geometric"):
    """Centroid of the vectors of s's disambiguation words; None when the
    whole vocabulary is out of store. Words are visited in sorted order so
    the result does not depend on set iteration order."""
    syn = lex.synset(s)
    if syn is None:
        raise LookupError(f"unknown synset {s}")
    if stopwords is None:
        stopwords = load_stopwords()
    vocab = build_disamb_vocabulary(lex, syn, stopwords)
    found = []
    for word in sorted(vocab.word_set):
        v = store.get(word)
        if v is not None:
            found.append(np.asarray(v, dtype=np.float64))
    if not found:
        return None
    center = geometric_median(found, method=median)
    return SenseCentroid(s, center, len(found))


class EmbeddingMeasure:
    """Cosine similarity of sense centroids, with per-synset caching.
    Synsets with no in-store vocabulary (or a zero-norm centroid) score 0
    against everything."""

    def __init__(self, lex: Lexicon, store: VectorStore,
                 stopwords=None, median: str = "geometric"):
        self._lex = lex
        self._store = store
        self._stop = stopwords if stopwords is not None else load_stopwords()
        self._median = median
        self._centroids: dict[SynsetId, tuple | None] = {}

    def _centroid(self, sid):
        if sid in self._centroids:
            return self._centroids[sid]
        c = embed_centroid(self._lex, self._store, sid,
                           stopwords=self._stop, median=self._median)
        entry = None
        if c is not None:
            norm = float(np.sqrt((c.vector * c.vector).sum()))
            entry = (c.vector, norm)
        self._centroids[sid] = entry
        return entry

    def __call__(self, a: SynsetId, b: SynsetId) -> float:
        ca = self._centroid(a)
        cb = self._centroid(b)
        if ca is None or cb is None:
            return 0.0
        va, norm_a = ca
        vb, norm_b = cb
        if norm_a == 0.0 or norm_b == 0.0:
            return 0.0
        return float(np.dot(va, vb) / (norm_a * norm_b))


def embedding_relatedness(lex: Lexicon, store: VectorStore, a: SynsetId, b: SynsetId,
                          stopwords=None, median: str = "geometric") -> float:
    return EmbeddingMeasure(lex, store, stopwords, median)(a, b)


def _pair_key(a: SynsetId, b: SynsetId):
    ka = (a.pos.value, a.offset)
    kb = (b.pos.value, b.offset)
    return (a, b) if ka <= kb else (b, a)


class CachedMeasure:
    """Unordered-pair memo around a measure. Values are bit-identical to
    the wrapped measure; concurrent insertion of the same key is benign
    because the value is deterministic. hits/misses are diagnostics only
    (approximate under threads)."""

    def __init__(self, measure):
        self._measure = measure
        self._cache = {}
        self.hits = 0
        self.misses = 0

    def __call__(self, a: SynsetId, b: SynsetId) -> float:
        key = _pair_key(a, b)
        try:
            value = self._cache[key]
        except KeyError:
            value = self._measure(a, b)
            self._cache[key] = value
            self.misses += 1
            return value
        self.hits += 1
        return value

    def __len__(self):
        return len(self._cache)


def cached(measure) -> CachedMeasure:
    return CachedMeasure(measure)
