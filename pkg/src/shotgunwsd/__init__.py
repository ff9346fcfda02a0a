"""Unsupervised all-words word sense disambiguation.

Slides a window over a document, brute-forces sense configurations inside
each window, merges overlapping high-scoring configurations into longer
ones, and picks each word's sense by voting among the top configurations
that cover it.
"""

__version__ = "0.1.0"

from .corpus import POS, AnswerKey, Document, ScoreReport, Token, load_corpus, load_document, score
from .lexicon import Lexicon, load_lexicon, load_toy_lexicon, parse_wordnet

__all__ = [
    "POS", "AnswerKey", "Document", "ScoreReport", "Token",
    "load_corpus", "load_document", "score",
    "Lexicon", "load_lexicon", "load_toy_lexicon", "parse_wordnet",
    "__version__",
]
