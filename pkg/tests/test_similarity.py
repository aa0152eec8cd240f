import numpy as np
import pytest
from hypothesis import given, strategies as st

from temarema.errors import VectorFormatError
from temarema.similarity import (
    EmbeddingProvider,
    LexicalProvider,
    Phrase,
    PhraseKey,
    VectorStore,
    cosine,
    lexical_similarity,
    linked,
    load_vectors,
    parse_key,
)


def phrase(lemmas, slot="T", sent="s1", doc="d"):
    return Phrase(PhraseKey(doc, sent, slot), tuple((l, "NOUN") for l in lemmas))


def test_lexical_similarity_examples():
    assert lexical_similarity([("presidente", "NOUN")],
                              [("presidente", "NOUN"), ("empresa", "NOUN")]) == 0.5
    items = [("casa", "NOUN"), ("ver", "VERB")]
    assert lexical_similarity(items, list(items)) == 1.0
    assert lexical_similarity([("casa", "NOUN")], [("coche", "NOUN")]) == 0.0
    assert lexical_similarity([], []) == 0.0


def test_lexical_similarity_filters_function_words():
    a = [("el", "DET"), ("perro", "NOUN")]
    b = [("un", "DET"), ("perro", "NOUN"), ("y", "CCONJ")]
    assert lexical_similarity(a, b) == 1.0


def test_lexical_similarity_case_and_normalization():
    assert lexical_similarity([("Juan", "PROPN")], [("juan", "PROPN")]) == 1.0


@given(
    st.lists(st.sampled_from(["a", "b", "c", "d"]), max_size=5),
    st.lists(st.sampled_from(["a", "b", "c", "d"]), max_size=5),
)
def test_lexical_similarity_symmetric_and_bounded(xs, ys):
    a = [(w, "NOUN") for w in xs]
    b = [(w, "NOUN") for w in ys]
    s = lexical_similarity(a, b)
    assert s == lexical_similarity(b, a)
    assert 0.0 <= s <= 1.0
    if xs:
        assert lexical_similarity(a, a) == 1.0


def test_cosine_examples():
    assert cosine([1.0, 2.0], [1.0, 2.0]) == pytest.approx(1.0)
    assert cosine([1.0, 0.0], [0.0, 1.0]) == pytest.approx(0.0)
    assert cosine([1.0, 2.0, 2.0], [2.0, 1.0, 2.0]) == pytest.approx(8.0 / 9.0)


def test_cosine_errors():
    with pytest.raises(VectorFormatError, match="zero"):
        cosine([0.0, 0.0], [1.0, 0.0])
    with pytest.raises(VectorFormatError, match="mismatch"):
        cosine([1.0], [1.0, 2.0])


def test_cosine_clamped_to_unit_interval():
    v = [1e-8, 1.0, 1e8]
    assert -1.0 <= cosine(v, v) <= 1.0


VEC = "dim 4\nd/s1/T\t1 0 0 0\nd/s1/R\t0 1.5e0 0 0\n"


def test_load_vectors_basic():
    store = load_vectors(VEC.encode("utf-8"))
    assert store.dim == 4
    assert set(store.vectors) == {"d/s1/T", "d/s1/R"}
    assert store.vectors["d/s1/R"][1] == 1.5


def test_load_vectors_empty_body():
    store = load_vectors("dim 3\n")
    assert store.dim == 3 and store.vectors == {}


@pytest.mark.parametrize(
    "text,message",
    [
        ("nope\n", "header"),
        ("dim x\n", "bad dimension"),
        ("dim 4\nd/s1/T\t1 2 3\n", "line 2: expected 4"),
        ("dim 2\nd/s1/T\t1 nan\n", "non-finite"),
        ("dim 2\nd/s1/T\t1 z\n", "non-numeric"),
        ("dim 2\nd/s1/Q\t1 2\n", "unparseable"),
        ("dim 2\nmissingtab 1 2\n", "missing tab"),
        ("dim 2\nd/s1/T\t1 2\nd/s1/T\t3 4\n", "duplicate"),
    ],
)
def test_load_vectors_errors(text, message):
    with pytest.raises(VectorFormatError, match=message):
        load_vectors(text)


def test_parse_key_slash_tolerant():
    key = parse_key("corpus/part/a/s1/T")
    assert key.doc_id == "corpus/part/a"
    assert key.sent_id == "s1"
    assert key.slot == "T"


def test_linked_threshold_boundary():
    provider = LexicalProvider()
    a = phrase(["x"], sent="s1")
    b = phrase(["x", "y"], sent="s2")
    assert provider.score(a, b) == 0.5
    assert linked(a, b, provider, 0.5)  # score == tau counts as linked
    assert not linked(a, b, provider, 0.50001)
    assert linked(a, phrase(["x"], sent="s3"), provider, 1.0)


def test_embedding_provider_scores_and_falls_back():
    store = load_vectors("dim 2\nd/s1/T\t1 0\nd/s2/T\t0 1\n")
    provider = EmbeddingProvider(store)
    a = Phrase(PhraseKey("d", "s1", "T"), (("gato", "NOUN"),))
    b = Phrase(PhraseKey("d", "s2", "T"), (("gato", "NOUN"),))
    c = Phrase(PhraseKey("d", "s3", "T"), (("gato", "NOUN"),))
    assert provider.score(a, b) == pytest.approx(0.0)
    assert provider.fallbacks == 0
    assert provider.score(a, c) == 1.0  # lexical fallback: identical lemmas
    assert provider.fallbacks == 1


def test_positive_scaling_preserves_link_decisions():
    rng = np.random.default_rng(7)
    keys = [f"d/s{i}/T" for i in range(6)]
    base = {k: rng.normal(size=8) for k in keys}
    phrases = {k: Phrase(parse_key(k), ()) for k in keys}

    def decisions(scale):
        store = VectorStore(8, {k: v * scale for k, v in base.items()})
        provider = EmbeddingProvider(store)
        return [
            linked(phrases[a], phrases[b], provider, 0.55)
            for a in keys
            for b in keys
            if a < b
        ]

    reference = decisions(1.0)
    for scale in (0.25, 3.0, 1e3):
        assert decisions(scale) == reference
