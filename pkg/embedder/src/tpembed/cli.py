"""Command-line entry point: ``tpembed export``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .encoders import DEFAULT_MODEL, ExportError
from .export import ExportJob, export_vectors


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tpembed",
        description="Export theme/rheme phrase embedding vectors",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p_export = sub.add_parser("export", help="write a phrase-vector file")
    p_export.add_argument("--input", required=True, help="annotated CoNLL-U file")
    p_export.add_argument(
        "--model",
        default=DEFAULT_MODEL,
        help="sentence-embedding model id, or hash:<dim> for the offline encoder",
    )
    p_export.add_argument("--output", required=True, help="vector file to write")
    p_export.add_argument(
        "--normalize", action="store_true", help="unit-normalize every row"
    )
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    job = ExportJob(
        input_path=Path(args.input),
        model_id=args.model,
        output_path=Path(args.output),
        normalize=args.normalize,
    )
    try:
        count = export_vectors(job)
    except ExportError as exc:
        print(f"tpembed: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"tpembed: i/o error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {count} vectors to {job.output_path}", file=sys.stderr)
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
