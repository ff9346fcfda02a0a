"""Shared fixtures: toy lexicon, vectors, corpus, and a miniature WordNet
database directory laid out byte-for-byte like the real data/index files."""

from pathlib import Path

import pytest

from shotgunwsd.corpus import load_corpus, load_document
from shotgunwsd.lexicon import load_lexicon, load_stopwords
from shotgunwsd.relatedness import LeskMeasure, load_vectors, write_vectors

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def toy_lexicon():
    return load_lexicon(DATA / "toy_lexicon.txt")


@pytest.fixture(scope="session")
def stopwords():
    return load_stopwords()


@pytest.fixture(scope="session")
def vector_store():
    return load_vectors(DATA / "toy_vectors.txt", format="text")


@pytest.fixture(scope="session")
def binary_vectors_path(tmp_path_factory, vector_store):
    """The text fixture rewritten in the binary layout."""
    path = tmp_path_factory.mktemp("vec") / "toy_vectors.bin"
    write_vectors(path, {w: vector_store.get(w) for w in vector_store.words()},
                  format="binary")
    return path


@pytest.fixture(scope="session")
def toy_docs():
    return load_corpus(DATA / "toy_corpus.txt")


@pytest.fixture(scope="session")
def ablation_doc():
    return load_document(DATA / "ablation_doc.txt")


@pytest.fixture()
def lesk_measure(toy_lexicon, stopwords):
    return LeskMeasure(toy_lexicon, stopwords)


# ---------------------------------------------------------------------------
# Miniature WordNet database. Each entry renders at a fixed width, so line
# start offsets stay put when symbolic references are resolved on the second
# pass, exactly like the fixed-width offsets in the real files.
# ---------------------------------------------------------------------------

_HEADER = (
    "  1 This mini database follows the WordNet 3.x file layout.\n"
    "  2 Header lines begin with whitespace and carry no entries.\n"
)

# (name, template) per data file; {x} placeholders are synset names.
_DATA_ENTRIES = {
    "noun": [
        ("vehicle", "{vehicle} 03 n 01 vehicle 0 001 ~ {car} n 0000 "
                    "| a conveyance that transports people or objects"),
        ("car", "{car} 03 n 02 car 0 automobile 1 002 @ {vehicle} n 0000 "
                "%p {wheel} n 0000 | a motor vehicle; \"he drove the car\""),
        ("wheel", "{wheel} 06 n 01 wheel 0 000 "
                  "| a circular frame that rolls"),
        ("bank_fin", "{bank_fin} 14 n 01 bank 0 000 "
                     "| a financial institution; \"the bank holds deposits\""),
        ("bank_river", "{bank_river} 17 n 01 bank 1 000 "
                       "| sloping land beside water"),
    ],
    "verb": [
        ("run", "{run} 29 v 01 run 0 001 @ {travel} v 0000 01 + 02 00 "
                "| move fast; \"he ran to the store\""),
        ("travel", "{travel} 29 v 01 travel 0 000 01 + 02 00 "
                   "| change location"),
    ],
    "adj": [
        ("fast_head", "{fast_head} 00 a 02 fast 0 quick(a) 1 001 & {speedy} a 0000 "
                      "| acting with speed; \"a fast car\""),
        ("speedy", "{speedy} 00 s 01 speedy 0 001 & {fast_head} a 0000 "
                   "| marked by rapidity"),
        ("automotive", "{automotive} 01 a 01 automotive 0 001 \\ {car} n 0000 "
                       "| relating to cars"),
    ],
    "adv": [
        ("fast_adv", "{fast_adv} 02 r 01 fast 0 001 \\ {fast_head} a 0000 "
                     "| in a rapid manner"),
    ],
}

_INDEX_ENTRIES = {
    "noun": [
        "vehicle n 1 1 ~ 1 0 {vehicle}",
        "car n 1 2 @ %p 1 1 {car}",
        "automobile n 1 0 1 0 {car}",
        "wheel n 1 0 1 0 {wheel}",
        "bank n 2 0 2 2 {bank_fin} {bank_river}",
    ],
    "verb": [
        "run v 1 1 @ 1 0 {run}",
        "travel v 1 0 1 0 {travel}",
    ],
    "adj": [
        "fast a 1 1 & 1 0 {fast_head}",
        "quick a 1 0 1 0 {fast_head}",
        "speedy a 1 0 1 0 {speedy}",
        "automotive a 1 0 1 0 {automotive}",
    ],
    "adv": [
        "fast r 1 0 1 0 {fast_adv}",
    ],
}


def build_mini_wordnet(directory: Path) -> dict[str, int]:
    """Write index.* and data.* files; returns name -> byte offset."""
    placeholder = {name: "0" * 8
                   for entries in _DATA_ENTRIES.values()
                   for name, _ in entries}
    offsets: dict[str, int] = {}
    for suffix, entries in _DATA_ENTRIES.items():
        pos = len(_HEADER.encode())
        for name, template in entries:
            offsets[name] = pos
            pos += len(template.format(**placeholder).encode()) + 1

    rendered = {name: f"{offset:08d}" for name, offset in offsets.items()}
    directory.mkdir(parents=True, exist_ok=True)
    for suffix, entries in _DATA_ENTRIES.items():
        body = "".join(template.format(**rendered) + "\n" for _, template in entries)
        (directory / f"data.{suffix}").write_text(_HEADER + body, encoding="utf-8")
    for suffix, lines in _INDEX_ENTRIES.items():
        body = "".join(line.format(**rendered) + "\n" for line in lines)
        (directory / f"index.{suffix}").write_text(_HEADER + body, encoding="utf-8")
    return offsets


@pytest.fixture(scope="session")
def mini_wordnet(tmp_path_factory):
    directory = tmp_path_factory.mktemp("wn") / "db"
    offsets = build_mini_wordnet(directory)
    return directory, offsets
