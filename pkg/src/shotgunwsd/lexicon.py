"""Sense inventory.

Loads a lexicon from either WordNet 3.x database files or a small text
format for desk-scale tests, and builds the per-synset disambiguation
vocabulary (stopword-filtered, Porter-stemmed content words of the synset
and its POS-admitted related synsets) that both relatedness measures
consume.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from pathlib import Path

from .corpus import POS
from .errors import ParseError
from .porter import porter_stem

log = logging.getLogger(__name__)


class PointerKind(Enum):
    HYPERNYM = "hypernym"
    HYPONYM = "hyponym"
    MERONYM = "meronym"
    HOLONYM = "holonym"
    SIMILAR_TO = "similar_to"
    ANTONYM = "antonym"
    ATTRIBUTE = "attribute"
    PERTAINYM = "pertainym"
    SEE_ALSO = "see_also"
    ENTAILMENT = "entailment"
    CAUSE = "cause"
    DOMAIN_TOPIC = "domain_topic"
    DERIVATIONALLY_RELATED = "derivationally_related"
    OTHER = "other"


# WordNet pointer symbols consumed by the data-file parser. Anything not
# listed here (instance pointers, domain members, participles, ...) is kept
# as OTHER and never expanded.
_POINTER_SYMBOLS = {
    "@": PointerKind.HYPERNYM,
    "~": PointerKind.HYPONYM,
    "%m": PointerKind.MERONYM,
    "%s": PointerKind.MERONYM,
    "%p": PointerKind.MERONYM,
    "#m": PointerKind.HOLONYM,
    "#s": PointerKind.HOLONYM,
    "#p": PointerKind.HOLONYM,
    "&": PointerKind.SIMILAR_TO,
    "!": PointerKind.ANTONYM,
    "=": PointerKind.ATTRIBUTE,
    "\\": PointerKind.PERTAINYM,
    "^": PointerKind.SEE_ALSO,
    "*": PointerKind.ENTAILMENT,
    ">": PointerKind.CAUSE,
    ";c": PointerKind.DOMAIN_TOPIC,
    "+": PointerKind.DERIVATIONALLY_RELATED,
}

# Relation kinds whose targets join a synset's disambiguation vocabulary,
# by the POS of the source synset. Verb "troponyms" are WordNet hyponym
# pointers; verb "outcomes" are cause pointers; adverb "topics" are
# domain-topic pointers.
ADMITTED_RELATIONS = {
    POS.NOUN: frozenset({PointerKind.HYPONYM, PointerKind.MERONYM}),
    POS.ADJECTIVE: frozenset({
        PointerKind.SIMILAR_TO, PointerKind.ANTONYM, PointerKind.ATTRIBUTE,
        PointerKind.PERTAINYM, PointerKind.SEE_ALSO,
    }),
    POS.VERB: frozenset({
        PointerKind.HYPONYM, PointerKind.HYPERNYM,
        PointerKind.ENTAILMENT, PointerKind.CAUSE,
    }),
    POS.ADVERB: frozenset({
        PointerKind.ANTONYM, PointerKind.PERTAINYM, PointerKind.DOMAIN_TOPIC,
    }),
}


@dataclass(frozen=True)
class SynsetId:
    pos: POS
    offset: int

    def __str__(self):
        return f"{self.pos.value}/{self.offset:08d}"


@dataclass(frozen=True)
class Synset:
    id: SynsetId
    lemmas: tuple[str, ...]
    gloss: str
    examples: tuple[str, ...]
    pointers: tuple[tuple[PointerKind, SynsetId], ...]

    def __post_init__(self):
        if not self.lemmas:
            raise ValueError(f"synset {self.id} has no lemmas")


@dataclass(frozen=True)
class SenseEntry:
    lemma: str
    pos: POS
    sense_number: int
    synset: SynsetId


@dataclass(frozen=True)
class DisambVocabulary:
    """Feature basis of one synset: ordered stem sequences (one per source
    text actually used) and the raw lowercased content-word set."""

    sequences: tuple[tuple[str, ...], ...]
    word_set: frozenset[str]


_WN_POS_NUMBER = {POS.NOUN: 1, POS.VERB: 2, POS.ADJECTIVE: 3, POS.ADVERB: 4}


class Lexicon:
    """Immutable sense inventory; safe for concurrent reads."""

    def __init__(self, synsets, senses, key_style):
        self._synsets = dict(synsets)
        self._senses = {k: tuple(v) for k, v in senses.items()}
        if key_style not in ("toy", "wordnet"):
            raise ValueError(f"unknown key style: {key_style!r}")
        self.key_style = key_style

    def __len__(self):
        return len(self._synsets)

    def __iter__(self):
        return iter(self._synsets.values())

    def synset(self, sid: SynsetId) -> Synset | None:
        return self._synsets.get(sid)

    def senses_of(self, lemma: str, pos: POS) -> tuple[SenseEntry, ...]:
        return self._senses.get((lemma.lower(), pos), ())

    def sense_key(self, entry: SenseEntry) -> str:
        if self.key_style == "toy":
            return f"{entry.lemma}%{entry.pos.value}#{entry.sense_number}"
        num = _WN_POS_NUMBER[entry.pos]
        return f"{entry.lemma}%{num}:{entry.synset.offset:08d}"


def senses_of(lex: Lexicon, lemma: str, pos: POS) -> tuple[SenseEntry, ...]:
    return lex.senses_of(lemma, pos)


def related_synsets(lex: Lexicon, s: Synset) -> list[tuple[PointerKind, Synset]]:
    """Pointer targets admitted for s's POS, in pointer listing order.

    Dangling targets are skipped with a warning rather than raised: a
    lexicon loaded from a subset of WordNet files can legitimately point
    outside itself.
    """
    admitted = ADMITTED_RELATIONS.get(s.id.pos, frozenset())
    out = []
    for kind, target in s.pointers:
        if kind not in admitted:
            continue
        resolved = lex.synset(target)
        if resolved is None:
            log.warning("dangling %s pointer %s -> %s", kind.value, s.id, target)
            continue
        out.append((kind, resolved))
    return out


# A token is a run of letters/digits, optionally chained by internal
# apostrophes. Underscores are boundaries, so multiword lemmas split.
_TOKEN_RE = re.compile(r"[^\W_]+(?:'[^\W_]+)*")


def content_words(text: str, stopwords: frozenset[str]) -> list[str]:
    return [w for w in _TOKEN_RE.findall(text.lower()) if w not in stopwords]


def build_disamb_vocabulary(lex: Lexicon, s: Synset,
                            stopwords: frozenset[str]) -> DisambVocabulary:
    """Stem sequences and raw word set for one synset.

    Source texts, in order: the synset's own lemma list (one text), its
    gloss, each example; then per admitted related synset its lemma list,
    gloss, and examples. Texts with no content words contribute nothing.
    """
    sources = [" ".join(s.lemmas), s.gloss, *s.examples]
    for _, rel in related_synsets(lex, s):
        sources.append(" ".join(rel.lemmas))
        sources.append(rel.gloss)
        sources.extend(rel.examples)

    sequences = []
    words = set()
    for text in sources:
        raw = content_words(text, stopwords)
        if not raw:
            continue
        sequences.append(tuple(porter_stem(w) for w in raw))
        words.update(raw)
    return DisambVocabulary(tuple(sequences), frozenset(words))


def own_disamb_vocabulary(s: Synset, stopwords: frozenset[str]) -> DisambVocabulary:
    """Like build_disamb_vocabulary but without relation expansion; the
    basis used when scoring synsets of different POS against each other."""
    sequences = []
    words = set()
    for text in (" ".join(s.lemmas), s.gloss, *s.examples):
        raw = content_words(text, stopwords)
        if not raw:
            continue
        sequences.append(tuple(porter_stem(w) for w in raw))
        words.update(raw)
    return DisambVocabulary(tuple(sequences), frozenset(words))


def load_stopwords(path=None) -> frozenset[str]:
    """Stopword file: one word per line, # comments. Default list ships
    with the package."""
    if path is None:
        text = resources.files("shotgunwsd").joinpath("data/stopwords.txt").read_text("utf-8")
    else:
        text = Path(path).read_text("utf-8")
    words = set()
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        words.add(line.lower())
    return frozenset(words)


_TOY_POS = {"n": POS.NOUN, "v": POS.VERB, "a": POS.ADJECTIVE, "r": POS.ADVERB}


def load_toy_lexicon(path) -> Lexicon:
    """Small text lexicon. Three line kinds:

        synset <id> <pos> | lemma1,lemma2 | gloss | example | example ...
        ptr <src-id> <kind> <dst-id>
        sense <lemma> <pos> <n> <synset-id>

    Synset ids are integers, unique across all POS so that ptr lines can
    name them bare. Blank lines and # comments are allowed.
    """
    path = Path(path)
    drafts = {}        # raw id -> (lineno, SynsetId, lemmas, gloss, examples)
    raw_pointers = []  # (lineno, src raw id, kind, dst raw id)
    raw_senses = []    # (lineno, lemma, pos, n, raw synset id)

    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            keyword = line.split(maxsplit=1)[0]
            if keyword == "synset":
                segments = [seg.strip() for seg in line.split("|")]
                head = segments[0].split()
                if len(head) != 3 or len(segments) < 3:
                    raise ParseError("synset line needs 'synset <id> <pos> | lemmas | gloss'",
                                     path=path, line=lineno)
                raw_id = _toy_int(head[1], path, lineno)
                pos = _toy_pos(head[2], path, lineno)
                if raw_id in drafts:
                    raise ParseError(f"duplicate synset id {raw_id}", path=path, line=lineno)
                lemmas = tuple(w.strip() for w in segments[1].split(",") if w.strip())
                if not lemmas:
                    raise ParseError("synset has no lemmas", path=path, line=lineno)
                gloss = segments[2]
                examples = tuple(seg for seg in segments[3:] if seg)
                drafts[raw_id] = (lineno, SynsetId(pos, raw_id), lemmas, gloss, examples)
            elif keyword == "ptr":
                fields = line.split()
                if len(fields) != 4:
                    raise ParseError("ptr line needs 'ptr <src> <kind> <dst>'",
                                     path=path, line=lineno)
                try:
                    kind = PointerKind(fields[2])
                except ValueError:
                    raise ParseError(f"unknown pointer kind {fields[2]!r}",
                                     path=path, line=lineno) from None
                raw_pointers.append((lineno, _toy_int(fields[1], path, lineno),
                                     kind, _toy_int(fields[3], path, lineno)))
            elif keyword == "sense":
                fields = line.split()
                if len(fields) != 5:
                    raise ParseError("sense line needs 'sense <lemma> <pos> <n> <synset-id>'",
                                     path=path, line=lineno)
                n = _toy_int(fields[3], path, lineno)
                if n < 1:
                    raise ParseError("sense numbers start at 1", path=path, line=lineno)
                raw_senses.append((lineno, fields[1].lower(),
                                   _toy_pos(fields[2], path, lineno), n,
                                   _toy_int(fields[4], path, lineno)))
            else:
                raise ParseError(f"unknown line kind {keyword!r}", path=path, line=lineno)

    pointers_by_src = {raw_id: [] for raw_id in drafts}
    for lineno, src, kind, dst in raw_pointers:
        if src not in drafts:
            raise ParseError(f"ptr source {src} not declared", path=path, line=lineno)
        if dst not in drafts:
            raise ParseError(f"ptr target {dst} not declared", path=path, line=lineno)
        pointers_by_src[src].append((kind, drafts[dst][1]))

    synsets = {}
    for raw_id, (lineno, sid, lemmas, gloss, examples) in drafts.items():
        synsets[sid] = Synset(sid, lemmas, gloss, examples,
                              tuple(pointers_by_src[raw_id]))

    senses = {}
    for lineno, lemma, pos, n, raw_id in raw_senses:
        if raw_id not in drafts:
            raise ParseError(f"sense references undeclared synset {raw_id}",
                             path=path, line=lineno)
        bucket = senses.setdefault((lemma, pos), {})
        if n in bucket:
            raise ParseError(f"duplicate sense number {n} for {lemma}/{pos.value}",
                             path=path, line=lineno)
        bucket[n] = SenseEntry(lemma, pos, n, drafts[raw_id][1])

    ordered = {}
    for (lemma, pos), bucket in senses.items():
        numbers = sorted(bucket)
        if numbers != list(range(1, len(numbers) + 1)):
            raise ParseError(f"sense numbers for {lemma}/{pos.value} are not 1..N: {numbers}",
                             path=path)
        ordered[(lemma, pos)] = tuple(bucket[n] for n in numbers)

    return Lexicon(synsets, ordered, key_style="toy")


def _toy_int(text, path, lineno):
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"expected an integer, got {text!r}", path=path, line=lineno) from None


def _toy_pos(text, path, lineno):
    pos = _TOY_POS.get(text)
    if pos is None:
        raise ParseError(f"expected POS letter n/v/a/r, got {text!r}", path=path, line=lineno)
    return pos


# --- WordNet 3.x database files ---

_WN_SUFFIXES = {"noun": POS.NOUN, "verb": POS.VERB, "adj": POS.ADJECTIVE, "adv": POS.ADVERB}
_SS_TYPE_POS = {"n": POS.NOUN, "v": POS.VERB, "a": POS.ADJECTIVE, "s": POS.ADJECTIVE,
                "r": POS.ADVERB}
_ADJ_MARKER_RE = re.compile(r"\((a|p|ip)\)$")


def parse_wordnet(directory) -> Lexicon:
    """Load index.{noun,verb,adj,adv} and data.{noun,verb,adj,adv}.

    Only the fields needed here are consumed: offsets, synset words,
    pointers, glosses, and index sense ordering. Satellite adjectives fold
    into the adjective POS, matching how pointer fields address them.
    """
    directory = Path(directory)
    synsets = {}
    for suffix in _WN_SUFFIXES:
        synsets.update(_parse_wn_data(directory / f"data.{suffix}"))
    senses = {}
    for suffix, pos in _WN_SUFFIXES.items():
        _parse_wn_index(directory / f"index.{suffix}", pos, synsets, senses)
    return Lexicon(synsets, senses, key_style="wordnet")


def _require_file(path):
    if not path.is_file():
        raise ParseError(f"missing WordNet file: {path}")


def _parse_wn_data(path):
    _require_file(path)
    out = {}
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, 1):
            if line.startswith(" ") or not line.strip():
                continue  # license header / padding
            try:
                out.update(_parse_wn_data_line(line))
            except (ValueError, IndexError, KeyError) as exc:
                raise ParseError(f"malformed data line: {exc}",
                                 path=path, line=lineno) from None
    return out


def _parse_wn_data_line(line):
    head, _, glosspart = line.partition("|")
    fields = head.split()
    offset = int(fields[0])
    ss_type = fields[2]
    pos = _SS_TYPE_POS[ss_type]
    w_cnt = int(fields[3], 16)
    lemmas = []
    i = 4
    for _ in range(w_cnt):
        lemmas.append(_ADJ_MARKER_RE.sub("", fields[i]))
        i += 2  # skip lex_id
    p_cnt = int(fields[i])
    i += 1
    pointers = []
    for _ in range(p_cnt):
        symbol, tgt_offset, tgt_pos = fields[i], int(fields[i + 1]), fields[i + 2]
        i += 4  # skip source/target field
        kind = _POINTER_SYMBOLS.get(symbol, PointerKind.OTHER)
        pointers.append((kind, SynsetId(_SS_TYPE_POS[tgt_pos], tgt_offset)))
    # verb frames (if any) sit between the pointers and the | and are skipped
    gloss, examples = _split_gloss(glosspart)
    sid = SynsetId(pos, offset)
    return {sid: Synset(sid, tuple(lemmas), gloss, examples, tuple(pointers))}


def _split_gloss(text):
    defs, examples = [], []
    for piece in text.split(";"):
        piece = piece.strip()
        if not piece:
            continue
        if piece.startswith('"'):
            examples.append(piece.strip('"'))
        else:
            defs.append(piece)
    return "; ".join(defs), tuple(examples)


def _parse_wn_index(path, pos, synsets, senses):
    _require_file(path)
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, 1):
            if line.startswith(" ") or not line.strip():
                continue
            fields = line.split()
            try:
                lemma = fields[0]
                synset_cnt = int(fields[2])
                p_cnt = int(fields[3])
                offsets = [int(x) for x in fields[6 + p_cnt:6 + p_cnt + synset_cnt]]
                if len(offsets) != synset_cnt:
                    raise ValueError(f"expected {synset_cnt} offsets, found {len(offsets)}")
            except (ValueError, IndexError) as exc:
                raise ParseError(f"malformed index line: {exc}",
                                 path=path, line=lineno) from None
            if (lemma, pos) in senses:
                raise ParseError(f"duplicate index entry for {lemma}", path=path, line=lineno)
            entries = []
            for n, offset in enumerate(offsets, 1):
                sid = SynsetId(pos, offset)
                if sid not in synsets:
                    raise ParseError(f"index offset {offset} not in data file",
                                     path=path, line=lineno)
                entries.append(SenseEntry(lemma, pos, n, sid))
            senses[(lemma, pos)] = tuple(entries)


def load_lexicon(path) -> Lexicon:
    """Dispatch on path kind: a directory is WordNet database files, a
    file is the toy format."""
    path = Path(path)
    if path.is_dir():
        return parse_wordnet(path)
    return load_toy_lexicon(path)
