"""temarema: theme/rheme annotation and thematic-progression schemas.

Pipeline overview:

1. Parse dependency-analysed text from CoNLL-U (:mod:`temarema.conllu`).
2. Build ordered dependency trees (:mod:`temarema.tree`).
3. Run a declarative theme grammar over each sentence to select the main
   proposition, the theme, and the rheme (:mod:`temarema.rules`,
   :mod:`temarema.annotate`).
4. Cluster theme/rheme phrases by similarity and classify progression
   links between sentences (:mod:`temarema.similarity`,
   :mod:`temarema.progression`).
5. Survey corpora: preceding-subject ratios and reference-vs-automatic
   comparison (:mod:`temarema.stats`).
"""

from importlib import resources

from .annotate import annotate_document, annotate_sentence, read_annotation
from .conllu import parse_document, serialize_document
from .progression import build_schema, export_schema
from .rules import parse_grammar
from .similarity import EmbeddingProvider, LexicalProvider, load_vectors
from .stats import compare, ratio
from .tree import build_tree

__version__ = "0.1.0"

__all__ = [
    "annotate_document",
    "annotate_sentence",
    "build_schema",
    "build_tree",
    "compare",
    "default_grammar_path",
    "default_grammar",
    "EmbeddingProvider",
    "export_schema",
    "LexicalProvider",
    "load_vectors",
    "parse_document",
    "parse_grammar",
    "ratio",
    "read_annotation",
    "serialize_document",
]


def default_grammar_path(name: str = "es_ancora"):
    """Filesystem path of a bundled grammar, e.g. ``es_ancora`` or ``es_freeling``."""
    return resources.files("temarema") / "grammars" / f"{name}.grammar"


def default_grammar(name: str = "es_ancora"):
    """The bundled grammar, parsed and ready to use."""
    return parse_grammar(default_grammar_path(name).read_text(encoding="utf-8"))
