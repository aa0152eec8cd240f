"""tpembed: offline exporter of theme/rheme phrase embedding vectors.

Reads a CoNLL-U file annotated with ``tp_*`` comment blocks, reconstructs
the theme and rheme phrase texts, encodes them with a pretrained
sentence-embedding model, and writes the tab-separated vector file the
analysis toolkit consumes.  Communication with that toolkit happens only
through these two file formats.
"""

__version__ = "0.1.0"
