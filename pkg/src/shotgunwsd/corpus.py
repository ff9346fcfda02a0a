"""Document model, corpus I/O, gold keys, F1 scoring, and the first-sense baseline.

Documents arrive pre-annotated (surface, POS tag, lemma, optional instance
id); there is no tokenizer or tagger here. The canonical interchange format
is plain text, one token per line; Senseval-style XML is converted on read.
"""

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional
from xml.etree import ElementTree

from .errors import ParseError


class POS(enum.Enum):
    NOUN = "n"
    VERB = "v"
    ADJECTIVE = "a"
    ADVERB = "r"
    OTHER = "o"


CONTENT_POS = (POS.NOUN, POS.VERB, POS.ADJECTIVE, POS.ADVERB)

# Exact single-letter tags (as used by Senseval XML pos attributes) come
# first; anything else goes through the prefix table, and unmatched tags are
# uniformly OTHER so that function words never fail a parse.
_EXACT_POS = {"n": POS.NOUN, "v": POS.VERB, "a": POS.ADJECTIVE, "s": POS.ADJECTIVE,
              "r": POS.ADVERB, "j": POS.ADJECTIVE, "o": POS.OTHER}


def map_pos_tag(tag: str) -> POS:
    """Map a free-form POS tag (Penn, Senseval letter, ...) to the 4-way enum."""
    t = tag.lower()
    if t in _EXACT_POS:
        return _EXACT_POS[t]
    if t.startswith("adv"):
        return POS.ADVERB
    if t.startswith("adj"):
        return POS.ADJECTIVE
    if t.startswith("n"):
        return POS.NOUN
    if t.startswith("v"):
        return POS.VERB
    if t.startswith("j"):
        return POS.ADJECTIVE
    if t.startswith("r"):
        return POS.ADVERB
    return POS.OTHER


@dataclass(frozen=True)
class Token:
    surface: str
    lemma: str
    pos: POS
    instance_id: Optional[str] = None


@dataclass(frozen=True)
class Document:
    id: str
    tokens: tuple[Token, ...]


class AnswerKey:
    """Gold annotations: (document id, instance id) -> acceptable sense keys."""

    def __init__(self, entries: Mapping[tuple[str, str], Iterable[str]]):
        self.entries: dict[tuple[str, str], frozenset[str]] = {}
        for ident, keys in entries.items():
            keyset = frozenset(keys)
            if not keyset:
                raise ValueError(f"empty gold key set for {ident}")
            self.entries[ident] = keyset

    def __len__(self):
        return len(self.entries)

    def __contains__(self, ident):
        return ident in self.entries

    def __getitem__(self, ident):
        return self.entries[ident]


@dataclass(frozen=True)
class ScoreReport:
    attempted: int
    total: int
    correct: int
    unknown: int
    precision: float
    recall: float
    f1: float


def score(predictions: Mapping[tuple[str, str], str], key: AnswerKey) -> ScoreReport:
    """Score predictions against a gold key.

    Predictions for instances absent from the key are ignored but counted in
    ``unknown``. A prediction is correct when it matches any gold alternative.
    """
    total = len(key)
    attempted = 0
    correct = 0
    unknown = 0
    for ident, pred in predictions.items():
        if ident not in key:
            unknown += 1
            continue
        attempted += 1
        if pred in key[ident]:
            correct += 1
    precision = correct / attempted if attempted else 0.0
    recall = correct / total if total else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall > 0 else 0.0
    return ScoreReport(attempted, total, correct, unknown, precision, recall, f1)


def mcs_baseline(doc: Document, lexicon) -> dict[str, str]:
    """First-listed-sense predictions for every annotated token with a known lemma."""
    out = {}
    for token in doc.tokens:
        if token.instance_id is None:
            continue
        senses = lexicon.senses_of(token.lemma, token.pos)
        if senses:
            out[token.instance_id] = lexicon.sense_key(senses[0])
    return out


# ---------------------------------------------------------------------------
# Canonical one-token-per-line format.
#
#   #doc <id>
#   surface pos-tag lemma instance-id      ('-' for absent lemma/instance-id)
#
# Blank lines separate documents; other lines starting with '#' are comments.
# ---------------------------------------------------------------------------

def _parse_canonical(lines, path) -> list[Document]:
    docs = []
    doc_id = None
    tokens: list[Token] = []
    seen_instances: set[str] = set()

    def flush():
        nonlocal doc_id, tokens, seen_instances
        if doc_id is not None:
            docs.append(Document(doc_id, tuple(tokens)))
        doc_id = None
        tokens = []
        seen_instances = set()

    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            flush()
            continue
        parts = line.split(maxsplit=1)
        if parts[0].startswith("#") and parts[0] != "#doc":
            continue
        if parts[0] == "#doc":
            if doc_id is not None:
                raise ParseError("'#doc' inside a document block (missing blank separator)",
                                 path, lineno)
            if len(parts) != 2 or not parts[1].strip():
                raise ParseError("'#doc' header without an id", path, lineno)
            doc_id = parts[1].strip()
            continue
        if doc_id is None:
            raise ParseError("token line before any '#doc' header", path, lineno)
        fields = line.split()
        if len(fields) != 4:
            raise ParseError(f"expected 4 fields, got {len(fields)}", path, lineno)
        surface, tag, lemma, instance = fields
        pos = map_pos_tag(tag)
        lemma_val = "" if lemma == "-" else lemma.lower()
        if pos is not POS.OTHER and not lemma_val:
            raise ParseError(f"content token {surface!r} lacks a lemma", path, lineno)
        instance_val = None if instance == "-" else instance
        if instance_val is not None:
            if instance_val in seen_instances:
                raise ParseError(f"duplicate instance id {instance_val!r}", path, lineno)
            seen_instances.add(instance_val)
        tokens.append(Token(surface, lemma_val, pos, instance_val))
    flush()
    return docs


def serialize_document(doc: Document) -> str:
    lines = [f"#doc {doc.id}"]
    for t in doc.tokens:
        lines.append(" ".join([t.surface, t.pos.value, t.lemma or "-", t.instance_id or "-"]))
    return "\n".join(lines) + "\n"


def save_corpus(docs: Iterable[Document], path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(serialize_document(d) for d in docs))


# ---------------------------------------------------------------------------
# Senseval-style XML: <text id=...> blocks containing <instance>/<wf>
# elements; any other markup and loose text become plain OTHER tokens.
# ---------------------------------------------------------------------------

def _parse_senseval_xml(path) -> list[Document]:
    try:
        tree = ElementTree.parse(path)
    except ElementTree.ParseError as exc:
        raise ParseError(f"malformed XML: {exc}", path) from exc
    root = tree.getroot()
    docs = []
    text_elems = root.iter("text") if root.tag != "text" else [root]
    for text in text_elems:
        doc_id = text.get("id")
        if not doc_id:
            raise ParseError("<text> element without an id", path)
        tokens: list[Token] = []
        seen: set[str] = set()

        def walk(elem):
            if elem.tag in ("instance", "wf"):
                surface = (elem.text or "").strip()
                lemma = (elem.get("lemma") or "").lower()
                pos = map_pos_tag(elem.get("pos") or "")
                instance = elem.get("id") if elem.tag == "instance" else None
                if instance is not None:
                    if not instance:
                        raise ParseError("<instance> without an id", path)
                    if instance in seen:
                        raise ParseError(f"duplicate instance id {instance!r}", path)
                    seen.add(instance)
                if pos is not POS.OTHER and not lemma:
                    raise ParseError(f"<{elem.tag}> {surface!r} lacks a lemma", path)
                tokens.append(Token(surface, lemma, pos, instance))
            else:
                for word in (elem.text or "").split():
                    tokens.append(Token(word, "", POS.OTHER))
                for child in elem:
                    walk(child)
            for word in (elem.tail or "").split():
                tokens.append(Token(word, "", POS.OTHER))

        for child in text:
            walk(child)
        docs.append(Document(doc_id, tuple(tokens)))
    return docs


def load_corpus(path, format: str = "canonical") -> list[Document]:
    """Load every document in a corpus file."""
    if format == "canonical":
        with open(path, encoding="utf-8") as fh:
            docs = _parse_canonical(fh, path)
    elif format == "senseval":
        docs = _parse_senseval_xml(path)
    else:
        raise ValueError(f"unknown corpus format {format!r}")
    seen = set()
    for doc in docs:
        if doc.id in seen:
            raise ParseError(f"duplicate document id {doc.id!r}", path)
        seen.add(doc.id)
    return docs


def load_document(path, format: str = "canonical") -> Document:
    """Load a single-document corpus file."""
    docs = load_corpus(path, format)
    if len(docs) != 1:
        raise ParseError(f"expected exactly one document, found {len(docs)}", path)
    return docs[0]


# ---------------------------------------------------------------------------
# Key files: '<doc-id> <instance-id> <sense-key>[ <sense-key>...]'
# ---------------------------------------------------------------------------

def load_answer_key(path) -> AnswerKey:
    entries: dict[tuple[str, str], list[str]] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            if len(fields) < 3:
                raise ParseError("expected '<doc> <instance> <key>...'", path, lineno)
            entries.setdefault((fields[0], fields[1]), []).extend(fields[2:])
    return AnswerKey(entries)


def load_predictions(path) -> dict[tuple[str, str], str]:
    preds: dict[tuple[str, str], str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            if len(fields) != 3:
                raise ParseError("expected '<doc> <instance> <key>'", path, lineno)
            ident = (fields[0], fields[1])
            if ident in preds:
                raise ParseError(f"duplicate prediction for {ident}", path, lineno)
            preds[ident] = fields[2]
    return preds


def save_predictions(predictions: Mapping[tuple[str, str], str], path):
    with open(path, "w", encoding="utf-8") as fh:
        for (doc_id, instance_id), key in predictions.items():
            fh.write(f"{doc_id} {instance_id} {key}\n")
