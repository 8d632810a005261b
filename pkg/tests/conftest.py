from pathlib import Path

import pytest

from mapumorph import MorphAnalyzer, MorphotacticTable, load_default_lexicon


@pytest.fixture(scope="session")
def lexicon():
    return load_default_lexicon()


@pytest.fixture(scope="session")
def table(lexicon):
    return MorphotacticTable(lexicon.suffixes)


@pytest.fixture(scope="session")
def analyzer(lexicon, table):
    return MorphAnalyzer(lexicon, table)


@pytest.fixture(scope="session")
def data_dir():
    return Path(__file__).parent / "data"
