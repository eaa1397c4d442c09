from __future__ import annotations

"""`featsel toy`: write the bundled synthetic dataset."""

import argparse

from featsel.core.objectives.data.dataset_loader import save_dataset
from featsel.core.objectives.data.toy_dataset import make_toy_dataset


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("toy", help="Generate the synthetic toy dataset CSV.")
    parser.add_argument("--out", default="data/toy.csv", help="Output CSV path.")
    parser.add_argument("--samples", type=int, default=120)
    parser.add_argument("--features", type=int, default=200)
    parser.add_argument("--classes", type=int, default=3)
    parser.add_argument("--informative", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    ds = make_toy_dataset(
        n_samples=args.samples,
        n_features=args.features,
        n_classes=args.classes,
        n_informative=args.informative,
        seed=args.seed,
    )
    print(save_dataset(ds, args.out))
    return 0
