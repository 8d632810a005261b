import unicodedata

from mapumorph.orthography import ALPHABET, alphabet_ok, is_vowel, normalize, tokenize


def test_normalize_lowercases_and_composes():
    # u + combining diaeresis composes to ü
    decomposed = "küpa"
    assert normalize(decomposed) == "küpa"
    assert normalize("Tripay") == "tripay"
    assert unicodedata.is_normalized("NFC", normalize("ñi"))


def test_alphabet_membership():
    assert alphabet_ok("nünieñmarputueyiñmu")
    assert alphabet_ok("küdaw")
    assert not alphabet_ok("xeno")
    assert not alphabet_ok("qim")
    assert "z" in ALPHABET  # loanword letter: valid spelling, usually unanalyzable


def test_vowels():
    assert all(is_vowel(v) for v in "aeiouü")
    assert not is_vowel("y")
    assert not is_vowel("w")


def test_tokenize_positions_and_punctuation():
    lines = ["Tripay ñi chaw,  müna küdaw!", "", "¿Akuy kiñe karta?"]
    tokens = list(tokenize(lines, source="sample"))
    forms = [t.form for t in tokens]
    assert forms == ["tripay", "ñi", "chaw", "müna", "küdaw", "akuy", "kiñe", "karta"]
    # positions are dense over the whole stream, not per line
    assert [t.position for t in tokens] == list(range(8))
    assert tokens[0].source == "sample"
    assert tokens[2].raw == "chaw,"


def test_tokenize_skips_pure_punctuation():
    tokens = list(tokenize(["- ; tripay ."]))
    assert [t.form for t in tokens] == ["tripay"]
