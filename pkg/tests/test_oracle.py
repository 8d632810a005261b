"""The trie walk must agree with the exhaustive-split oracle everywhere."""

from hypothesis import given, settings, strategies as st

from mapumorph.analyzer import MorphAnalyzer
from mapumorph.lexicon import load_default_lexicon
from mapumorph.morphotactics import MorphotacticTable
from mapumorph.phonology import suffix_realizations

from oracle import analysis_tuples, brute_analyses

LEXICON = load_default_lexicon()
TABLE = MorphotacticTable(LEXICON.suffixes)
ANALYZER = MorphAnalyzer(LEXICON, TABLE)

ROOT_PIECES = sorted(
    {e.lemma for e in LEXICON.entries}
    | {v for e in LEXICON.entries for v in e.variants}
    | {s for e in LEXICON.entries for a in e.alternants for s in a.stems}
)
SUFFIX_PIECES = sorted(
    {r.surface for s in LEXICON.suffixes for r in suffix_realizations(s) if r.surface}
)

SPOT_WORDS = [
    "nünieñmarputueyiñmu",
    "nünieñmarputueyiñmew",
    "pichikael",
    "düngufinge",
    "tripay",
    "küpalün",
    "langümün",
    "langüm",
    "lam",  # shadowed by the replacing alternant: zero analyses both ways
    "latuy",
    "nelüm",
    "nelküm",
    "umag",
    "mongelüy",
    "anümün",
    "tripayiñmu",
    "fam",
    "ngey",
    "zzz",
]


def agree(word: str):
    got = analysis_tuples(ANALYZER.analyze(word))
    want = brute_analyses(LEXICON, TABLE, word)
    assert got == want, f"{word}: analyzer {got} != oracle {want}"


def test_spot_words_match_oracle():
    for word in SPOT_WORDS:
        agree(word)


@st.composite
def assembled_words(draw):
    word = draw(st.sampled_from(ROOT_PIECES))
    for piece in draw(st.lists(st.sampled_from(SUFFIX_PIECES), max_size=4)):
        word += piece
    return word


@given(assembled_words())
@settings(max_examples=120, deadline=None)
def test_assembled_words_match_oracle(word):
    agree(word)


@given(st.text(alphabet="aefiklmnoprtuwyüñ", min_size=1, max_size=9))
@settings(max_examples=120, deadline=None)
def test_arbitrary_strings_match_oracle(word):
    agree(word)
