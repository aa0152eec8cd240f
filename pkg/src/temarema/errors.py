"""Exception hierarchy shared by all temarema modules."""


class TemaremaError(Exception):
    """Base class for all domain errors raised by this package."""


class ConlluParseError(TemaremaError):
    """A CoNLL-U row or block could not be parsed; message names the line."""


class ConlluStructureError(TemaremaError):
    """A parsed sentence violates structural constraints; message names the sentence."""


class TreeError(TemaremaError):
    """A dependency tree is ill-formed (cycle, missing root, unknown node)."""


class GrammarError(TemaremaError):
    """A grammar file is syntactically or referentially invalid."""


class VectorFormatError(TemaremaError):
    """A phrase-vector file violates the expected format."""


class AlignmentError(TemaremaError):
    """Two corpora passed to a comparison are not sentence-aligned."""


class StatsError(TemaremaError):
    """A statistics operation received unusable input."""


class AnnotationError(TemaremaError):
    """An annotation references unknown sentences or token ids."""
