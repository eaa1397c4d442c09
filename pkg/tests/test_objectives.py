import numpy as np
import pandas as pd
import pytest
from scipy.io import savemat

from featsel.core.genome import Genome
from featsel.core.initialization import genuine_init
from featsel.core.objectives import (
    Dataset,
    EvaluationMode,
    FitnessEvaluator,
    NFCCounter,
    SplitDataset,
    classification_error,
    convert_matrix_file,
    encode_labels,
    feature_ratio,
    load_dataset,
    make_toy_dataset,
    save_dataset,
    split,
)
from featsel.core.objectives.data.splitting import held_out_count
from featsel.core.utils.errors import (
    BudgetExhaustedError,
    ConfigError,
    DatasetParseError,
    DegenerateGenomeError,
)
from featsel.core.utils.helpers import make_rng


def _random_dataset(n, d, n_classes, seed=0):
    gen = make_rng(seed)
    y = np.arange(n) % n_classes
    return Dataset(name="rand", X=gen.normal(size=(n, d)), y=y.astype(np.int64))


# -------------------------------------------------------------------------
# Loading
# -------------------------------------------------------------------------


def test_load_dataset_parses_contract(write_csv):
    path = write_csv("a,b,c,class\n1,2,3,x\n4,5,6,y\n7,8,9,x\n0.5,1e-3,-2,z\n", "four.csv")
    ds = load_dataset(path)
    assert (ds.n_samples, ds.n_features, ds.n_classes) == (4, 3, 3)
    assert ds.name == "four"
    assert ds.class_names == ["x", "y", "z"]
    assert ds.y.tolist() == [0, 1, 0, 2]
    assert ds.X[3].tolist() == [0.5, 0.001, -2.0]


def test_feature_values_parse_to_the_nearest_double(write_csv):
    cells = ["0.30000000000000004", "2.2250738585072014e-308", "123456.78901234567", "-0.1"]
    path = write_csv(f"a,b,c,d,class\n{','.join(cells)},x\n1,2,3,4,y\n", "exact.csv")
    ds = load_dataset(path)
    assert ds.X[0].tolist() == [float(c) for c in cells]


def test_encode_labels():
    codes, names = encode_labels(pd.Series(["b", " a", "b", "c"]))
    assert names == ["a", "b", "c"]
    assert codes.tolist() == [1, 0, 1, 2]
    codes, names = encode_labels(pd.Series([2.0, 1.0, 10.0]))
    assert names == ["1", "2", "10"]
    assert codes.tolist() == [1, 0, 2]


def test_numeric_labels_sort_numerically(write_csv):
    ds = load_dataset(write_csv("f,class\n1,10\n2,9\n3,10\n"))
    assert ds.class_names == ["9", "10"]
    assert ds.y.tolist() == [1, 0, 1]


def test_missing_cell_names_the_row(write_csv):
    path = write_csv("a,b,c,class\n1,2,3,x\n4,,6,y\n")
    with pytest.raises(DatasetParseError, match="row 3") as info:
        load_dataset(path)
    assert info.value.row == 3


def test_non_numeric_feature_names_the_row(write_csv):
    path = write_csv("a,b,class\n1,2,x\n3,4,y\n5,abc,x\n")
    with pytest.raises(DatasetParseError, match="row 4"):
        load_dataset(path)


def test_label_column_must_be_last_and_named_class(write_csv):
    with pytest.raises(DatasetParseError, match="class"):
        load_dataset(write_csv("a,label\n1,x\n2,y\n"))


def test_single_class_is_rejected(write_csv):
    with pytest.raises(DatasetParseError):
        load_dataset(write_csv("a,class\n1,x\n2,x\n"))


def test_missing_file():
    with pytest.raises(DatasetParseError):
        load_dataset("/nonexistent/data.csv")


def test_save_then_load_keeps_values(tmp_path, toy_dataset):
    path = save_dataset(toy_dataset, tmp_path / "toy.csv")
    loaded = load_dataset(path)
    np.testing.assert_array_equal(loaded.X, toy_dataset.X)
    np.testing.assert_array_equal(loaded.y, toy_dataset.y)
    assert list(pd.read_csv(path).columns[-1:]) == ["class"]


# -------------------------------------------------------------------------
# Converter and toy data
# -------------------------------------------------------------------------


def test_convert_mat_file(tmp_path):
    gen = make_rng(2)
    X = gen.normal(size=(30, 12))
    Y = (np.arange(30) % 3 + 1).reshape(-1, 1)
    savemat(tmp_path / "bench.mat", {"X": X, "Y": Y})

    ds = convert_matrix_file(tmp_path / "bench.mat", tmp_path / "bench.csv")
    assert (ds.n_samples, ds.n_features, ds.n_classes) == (30, 12, 3)
    loaded = load_dataset(tmp_path / "bench.csv")
    np.testing.assert_allclose(loaded.X, X)
    assert loaded.class_names == ["1", "2", "3"]


def test_convert_mat_file_with_wrong_keys(tmp_path):
    savemat(tmp_path / "bench.mat", {"data": np.ones((4, 2))})
    with pytest.raises(DatasetParseError, match="lacks"):
        convert_matrix_file(tmp_path / "bench.mat", tmp_path / "bench.csv")


@pytest.mark.parametrize("sep", [",", "\t"])
def test_convert_delimited_text(tmp_path, sep):
    rows = ["1.5{0}2.0{0}0", "0.5{0}3.0{0}1", "2.5{0}1.0{0}0", "4.0{0}0.0{0}1"]
    source = tmp_path / "dump.txt"
    source.write_text("\n".join(r.format(sep) for r in rows) + "\n", encoding="utf-8")
    ds = convert_matrix_file(source, tmp_path / "dump.csv")
    assert (ds.n_samples, ds.n_features, ds.n_classes) == (4, 2, 2)
    assert ds.X[0].tolist() == [1.5, 2.0]


def test_toy_dataset_shape_and_determinism(toy_dataset):
    assert (toy_dataset.n_samples, toy_dataset.n_features, toy_dataset.n_classes) == (120, 200, 3)
    again = make_toy_dataset()
    np.testing.assert_array_equal(again.X, toy_dataset.X)
    assert make_toy_dataset(seed=1).X.tolist() != toy_dataset.X.tolist()


# -------------------------------------------------------------------------
# Splitting
# -------------------------------------------------------------------------


def test_split_sizes_follow_twenty_percent_rule():
    assert held_out_count(130, 0.2) == 26
    s = split(_random_dataset(130, 4, 10), seed=0)
    assert s.test.size == 26 and s.train.size == 104


def test_split_is_a_partition_and_deterministic():
    ds = _random_dataset(50, 3, 2)
    a, b = split(ds, seed=4), split(ds, seed=4)
    np.testing.assert_array_equal(a.train, b.train)
    np.testing.assert_array_equal(a.test, b.test)
    assert sorted(np.concatenate([a.train, a.test]).tolist()) == list(range(50))
    assert np.all(np.diff(a.train) > 0)


def test_different_seeds_give_different_splits():
    ds = _random_dataset(50, 3, 2)
    assert split(ds, seed=1).test.tolist() != split(ds, seed=2).test.tolist()


def test_stratified_split_keeps_proportions():
    s = split(_random_dataset(100, 3, 2), seed=3, stratify=True)
    assert np.bincount(s.y_test).tolist() == [10, 10]


def test_split_rejects_bad_fraction_and_tiny_data():
    with pytest.raises(ConfigError):
        split(_random_dataset(50, 3, 2), seed=0, test_fraction=0.6)
    with pytest.raises(DatasetParseError):
        split(_random_dataset(4, 3, 2), seed=0)


# -------------------------------------------------------------------------
# Objectives and evaluator
# -------------------------------------------------------------------------


@pytest.mark.parametrize(
    "genome, expected",
    [
        (Genome.ones(10), 1.0),
        (Genome.from_indices(range(24), 2400), 0.01),
        (Genome.zeros(10), 0.0),
    ],
)
def test_feature_ratio(genome, expected):
    assert feature_ratio(genome) == pytest.approx(expected)


def test_separable_clouds_have_zero_error(two_clouds):
    s = split(two_clouds, seed=0)
    assert classification_error(Genome.from_string("10"), s, EvaluationMode.TRAIN) == 0.0
    assert classification_error(Genome.from_string("11"), s, "train") == 0.0
    assert classification_error(Genome.from_string("10"), s, "test") == 0.0


def test_random_labels_are_at_chance():
    gen = make_rng(17)
    ds = Dataset(name="noise", X=gen.normal(size=(400, 5)), y=gen.integers(0, 2, 400).astype(np.int64))
    error = classification_error(Genome.ones(5), split(ds, seed=0), "train")
    assert error == pytest.approx(0.5, abs=0.1)


def test_every_prediction_wrong_gives_error_one():
    x = np.concatenate([np.arange(10.0), [100.0, 101.0]]).reshape(-1, 1)
    y = np.array([0, 1] * 6, dtype=np.int64)
    ds = Dataset(name="alternating", X=x, y=y)
    s = SplitDataset(dataset=ds, train=np.arange(10), test=np.array([10, 11]), seed=0)
    assert classification_error(Genome.ones(1), s, "train", k=1) == 1.0


def test_classifier_never_sees_an_empty_subset(toy_split):
    with pytest.raises(DegenerateGenomeError):
        classification_error(Genome.zeros(200), toy_split)


def test_unselected_constant_feature_changes_nothing(toy_split):
    ds = toy_split.dataset
    widened = Dataset(
        name="wide",
        X=np.hstack([ds.X, np.full((ds.n_samples, 1), 3.5)]),
        y=ds.y,
        class_names=ds.class_names,
    )
    wide_split = SplitDataset(
        dataset=widened, train=toy_split.train, test=toy_split.test, seed=toy_split.seed
    )
    for g in genuine_init(10, 200, 1, 30, make_rng(6)):
        padded = Genome.from_indices(g.selected_indices().tolist(), 201)
        for mode in ("train", "test"):
            assert classification_error(padded, wide_split, mode) == classification_error(
                g, toy_split, mode
            )


def test_train_error_is_the_same_for_fresh_evaluators(toy_split):
    population = genuine_init(20, 200, 1, 200, make_rng(9))
    first = FitnessEvaluator(toy_split, NFCCounter(20)).evaluate_batch(population)
    second = FitnessEvaluator(toy_split, NFCCounter(20)).evaluate_batch(population)
    assert [e.objectives for e in first] == [e.objectives for e in second]


def test_evaluator_charges_one_call_per_evaluation(toy_split):
    budget = NFCCounter(1000)
    evaluator = FitnessEvaluator(toy_split, budget)
    population = genuine_init(100, 200, 1, 200, make_rng(0))
    results = evaluator.evaluate_batch(population)
    assert budget.consumed == 100
    for r in results:
        assert 0.0 <= r.objectives.f1 <= 1.0 and 0.0 <= r.objectives.f2 <= 1.0
        assert r.nfc_cost == 1

    # cached genomes are still charged
    again = evaluator.evaluate(population[0])
    assert again.objectives == results[0].objectives
    assert budget.consumed == 101


def test_empty_genome_scores_worst_error(toy_split):
    budget = NFCCounter(5)
    evaluator = FitnessEvaluator(toy_split, budget)
    assert evaluator.evaluate(Genome.zeros(200)).objectives.as_tuple() == (1.0, 0.0)
    assert budget.consumed == 1


def test_budget_is_never_exceeded(toy_split):
    budget = NFCCounter(3)
    evaluator = FitnessEvaluator(toy_split, budget)
    genomes = genuine_init(4, 200, 1, 10, make_rng(1))
    with pytest.raises(BudgetExhaustedError):
        evaluator.evaluate_batch(genomes)
    assert budget.consumed == 0
    evaluator.evaluate_batch(genomes[:3])
    assert budget.exhausted
    with pytest.raises(BudgetExhaustedError):
        evaluator.evaluate(genomes[3])


def test_test_objectives_are_free(toy_split):
    budget = NFCCounter(10)
    evaluator = FitnessEvaluator(toy_split, budget)
    g = Genome.from_indices(range(5), 200)
    test = evaluator.test_objectives(g)
    assert budget.consumed == 0
    assert test.f2 == pytest.approx(5 / 200)
    assert test.f1 == classification_error(g, toy_split, "test")


def test_normalized_evaluation_uses_train_scaling(two_clouds):
    s = split(two_clouds, seed=1)
    evaluator = FitnessEvaluator(s, NFCCounter(5), normalize=True)
    assert evaluator.evaluate(Genome.from_string("10")).objectives.f1 == 0.0
