from __future__ import annotations

"""`featsel convert`: .mat or delimited numeric dumps -> dataset CSV."""

import argparse

from featsel.core.objectives.data.converter import convert_matrix_file


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("convert", help="Convert a matrix file to the dataset CSV format.")
    parser.add_argument("source", help=".mat file or delimited text (last column = label).")
    parser.add_argument("target", help="Output CSV path.")
    parser.add_argument("--x-key", default="X", help="Feature matrix variable in a .mat file.")
    parser.add_argument("--y-key", default="Y", help="Label variable in a .mat file.")
    parser.add_argument("--name", help="Dataset name (defaults to the source stem).")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    dataset = convert_matrix_file(
        args.source, args.target, x_key=args.x_key, y_key=args.y_key, name=args.name
    )
    print(f"{args.target}: {dataset.n_samples} samples, {dataset.n_features} features, {dataset.n_classes} classes")
    return 0
