import json
from pathlib import Path

import pytest

from temarema import default_grammar_path
from temarema.conllu import parse_document
from temarema.rules import parse_grammar

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def gold_grammar():
    return parse_grammar(Path(default_grammar_path()).read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def corpus_docs():
    return {
        path.stem: parse_document(path.read_text(encoding="utf-8"))
        for path in sorted((FIXTURES / "corpus").glob("*.conllu"))
    }


@pytest.fixture(scope="session")
def corpus_expected():
    return json.loads((FIXTURES / "corpus" / "expected.json").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def progression_docs():
    return {
        path.stem: parse_document(path.read_text(encoding="utf-8"))
        for path in sorted((FIXTURES / "progression").glob("*.conllu"))
    }


@pytest.fixture(scope="session")
def progression_expected():
    return json.loads(
        (FIXTURES / "progression" / "expected_links.json").read_text(encoding="utf-8")
    )
