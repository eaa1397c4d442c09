from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from featsel.core.objectives.data.dataset_loader import save_dataset
from featsel.core.objectives.data.schemas import Dataset, SplitDataset
from featsel.core.objectives.data.splitting import split
from featsel.core.objectives.data.toy_dataset import make_toy_dataset
from featsel.core.optimizer import OptimizerConfig, Variant, run
from featsel.core.utils.helpers import make_rng


@pytest.fixture
def rng() -> np.random.Generator:
    return make_rng(1234)


@pytest.fixture(scope="session")
def toy_dataset() -> Dataset:
    return make_toy_dataset()


@pytest.fixture(scope="session")
def toy_split(toy_dataset: Dataset) -> SplitDataset:
    return split(toy_dataset, seed=0)


@pytest.fixture(scope="session")
def small_toy_csv(tmp_path_factory: pytest.TempPathFactory) -> Path:
    """A small toy dataset on disk, quick enough for end-to-end sweeps."""
    ds = make_toy_dataset(n_samples=40, n_features=24, n_classes=2, n_informative=3, seed=3, name="small")
    return save_dataset(ds, tmp_path_factory.mktemp("data") / "small.csv")


@pytest.fixture
def two_clouds() -> Dataset:
    """Two classes separated along feature 0 only; feature 1 is noise."""
    gen = make_rng(7)
    n = 40
    y = np.repeat([0, 1], n // 2)
    X = np.column_stack([y * 10.0 + gen.normal(0, 0.1, n), gen.normal(0, 1.0, n)])
    return Dataset(name="clouds", X=X, y=y.astype(np.int64), class_names=["0", "1"])


@pytest.fixture
def write_csv(tmp_path: Path):
    """Write raw text to a CSV under tmp_path and return its path."""

    def _write(text: str, name: str = "data.csv") -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write


@pytest.fixture(scope="session")
def toy_runs(toy_split: SplitDataset):
    """One run per (variant, seed) on the toy split: N=50, 3000 calls, seeds 0..4."""
    return {
        (variant, seed): run(
            OptimizerConfig(population_size=50, max_nfc=3000, variant=variant, seed=seed),
            toy_split,
        )
        for variant in Variant
        for seed in range(5)
    }
