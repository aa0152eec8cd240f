"""Command-line interface: annotate, schema, stats ratio, stats compare.

Exit codes: 0 success, 1 domain or validation error, 2 I/O error.
Diagnostics go to stderr, data to stdout or the ``-o`` path, so the tool
composes in pipelines.  All commands are deterministic: the same inputs
and flags produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .annotate import annotate_document, read_annotation
from .conllu import parse_document, serialize_document
from .errors import TemaremaError
from .progression import build_schema, export_schema
from .rules import parse_grammar
from .similarity import EmbeddingProvider, LexicalProvider, load_vectors
from .stats import compare, ratio

DEFAULT_TAU = {"lexical": 0.6, "embedding": 0.55}
DEFAULT_WINDOW = 5


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="temarema",
        description="Theme/rheme annotation and thematic-progression schemas "
        "for dependency-parsed text",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_annotate = sub.add_parser("annotate", help="add theme/rheme tags to a CoNLL-U file")
    p_annotate.add_argument("input", help="CoNLL-U input file")
    p_annotate.add_argument("--grammar", required=True, help="theme grammar file")
    p_annotate.add_argument("-o", dest="output", help="output path (default: stdout)")

    p_schema = sub.add_parser("schema", help="extract the conceptual schema of an annotated file")
    p_schema.add_argument("input", help="annotated CoNLL-U file")
    p_schema.add_argument("--provider", choices=("lexical", "embedding"), default="lexical")
    p_schema.add_argument("--vectors", help="phrase-vector file (embedding provider)")
    p_schema.add_argument("--tau", type=float, default=None, help="similarity threshold")
    p_schema.add_argument("--window", type=int, default=DEFAULT_WINDOW)
    p_schema.add_argument("--format", choices=("json", "dot"), default="json")
    p_schema.add_argument("-o", dest="output", help="output path (default: stdout)")

    p_stats = sub.add_parser("stats", help="corpus survey reports")
    stats_sub = p_stats.add_subparsers(dest="stats_command", required=True)

    p_ratio = stats_sub.add_parser("ratio", help="preceding-subject theme ratios")
    p_ratio.add_argument("inputs", nargs="+", help="annotated files or directories")
    p_ratio.add_argument("--format", choices=("text", "json"), default="text")
    p_ratio.add_argument("-o", dest="output", help="output path (default: stdout)")

    p_compare = stats_sub.add_parser("compare", help="theme presence comparison")
    p_compare.add_argument("reference", help="reference annotated file or directory")
    p_compare.add_argument("auto", help="automatic annotated file or directory")
    p_compare.add_argument("--format", choices=("text", "json"), default="text")
    p_compare.add_argument("-o", dest="output", help="output path (default: stdout)")

    return parser


def _expand(path_text: str) -> list[Path]:
    path = Path(path_text)
    if path.is_dir():
        files = sorted(path.glob("*.conllu"))
        if not files:
            raise FileNotFoundError(f"no .conllu files in directory {path}")
        return files
    if not path.exists():
        raise FileNotFoundError(f"no such file: {path}")
    return [path]


def _load_documents(path_texts) -> list:
    docs = []
    for path_text in path_texts:
        for path in _expand(path_text):
            docs.append(parse_document(path.read_text(encoding="utf-8"), doc_id=path.stem))
    return docs


def _emit(data: bytes, output: str | None) -> None:
    if output:
        Path(output).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


class _UsageError(TemaremaError):
    pass


def _cmd_annotate(args) -> int:
    grammar = parse_grammar(Path(args.grammar).read_text(encoding="utf-8"))
    doc = parse_document(Path(args.input).read_text(encoding="utf-8"), doc_id=Path(args.input).stem)
    annotated = annotate_document(doc, grammar)
    counts = {"ok": 0, "no_theme": 0, "rejected": 0}
    for sent in annotated.sentences:
        ann = read_annotation(sent)
        if ann is not None:
            counts[ann.status] += 1
    _emit(serialize_document(annotated).encode("utf-8"), args.output)
    print(
        f"annotated {len(annotated.sentences)} sentences: "
        f"{counts['ok']} ok, {counts['no_theme']} no_theme, {counts['rejected']} rejected",
        file=sys.stderr,
    )
    return 0


def _cmd_schema(args) -> int:
    if args.provider == "embedding" and not args.vectors:
        raise _UsageError("--provider embedding requires --vectors")
    tau = args.tau if args.tau is not None else DEFAULT_TAU[args.provider]
    if not 0.0 < tau <= 1.0:
        raise _UsageError(f"--tau must be in (0, 1], got {tau}")
    if args.window < 1:
        raise _UsageError(f"--window must be >= 1, got {args.window}")
    if args.provider == "embedding":
        vector_path = Path(args.vectors)
        if not vector_path.exists():
            raise _UsageError(f"vector file not found: {vector_path}")
        provider = EmbeddingProvider(load_vectors(vector_path.read_bytes()))
    else:
        provider = LexicalProvider()
    doc = parse_document(Path(args.input).read_text(encoding="utf-8"), doc_id=Path(args.input).stem)
    if not any(read_annotation(s) is not None for s in doc.sentences):
        raise _UsageError(
            f"{args.input} carries no tp_* annotations; run 'temarema annotate' first"
        )
    graph = build_schema(doc, provider, tau, args.window)
    _emit(export_schema(graph, args.format), args.output)
    diag = ", ".join(f"{k}={v}" for k, v in sorted(graph.diagnostics.items()))
    print(f"schema for {graph.doc_id}: {diag}", file=sys.stderr)
    return 0


def _cmd_stats(args) -> int:
    if args.stats_command == "ratio":
        report = ratio(_load_documents(args.inputs))
    else:
        report = compare(_load_documents([args.reference]), _load_documents([args.auto]))
    if args.format == "json":
        data = (json.dumps(report.to_json_dict(), ensure_ascii=False, indent=2) + "\n").encode(
            "utf-8"
        )
    else:
        data = report.to_text().encode("utf-8")
    _emit(data, args.output)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "annotate":
            return _cmd_annotate(args)
        if args.command == "schema":
            return _cmd_schema(args)
        return _cmd_stats(args)
    except TemaremaError as exc:
        print(f"temarema: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"temarema: i/o error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
