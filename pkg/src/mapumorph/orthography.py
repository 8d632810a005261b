"""Orthography helpers: alphabet checks, normalization, corpus tokenization."""

from __future__ import annotations

import unicodedata
from typing import Iterable, Iterator, NamedTuple

# Unified-alphabet letters as they occur in the shipped data.  Digraphs
# (ch, ll, ng, tr) are sequences of these.  s and z occur in loans.
ALPHABET = frozenset("acdefghiklmnñoprstuüwyz")

VOWELS = frozenset("aeiouü")

_PUNCT = ".,;:!?()[]{}<>\"'`´¡¿«»…–—-"


def normalize(text: str) -> str:
    """NFC-normalize and lowercase a surface string."""
    return unicodedata.normalize("NFC", text).lower()


def is_vowel(ch: str) -> bool:
    return ch in VOWELS


def alphabet_ok(form: str) -> bool:
    return all(ch in ALPHABET for ch in form)


class Token(NamedTuple):
    source: str
    position: int  # token index within the source, 0-based
    form: str  # normalized, punctuation-stripped
    raw: str  # as it appeared in the text


def tokenize(lines: Iterable[str], source: str = "<stream>") -> Iterator[Token]:
    """Split a text stream into position-indexed tokens.

    Whitespace separates tokens; leading and trailing punctuation is
    stripped.  Tokens reduced to nothing by stripping are dropped, but
    positions count only surviving tokens so context windows stay dense.
    """
    position = 0
    for line in lines:
        for raw in line.split():
            form = normalize(raw).strip(_PUNCT)
            if not form:
                continue
            yield Token(source, position, form, raw)
            position += 1
