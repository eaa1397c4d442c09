import numpy as np
import pytest

from featsel.core.objectives.classifier.knn import knn_predict, knn_predict_batch
from featsel.core.utils.errors import DegenerateGenomeError
from featsel.core.utils.helpers import make_rng
from tests.oracles import brute_knn


def test_single_training_row_wins():
    assert knn_predict(np.array([[3.0, 4.0]]), np.array([2]), np.array([0.0, 0.0]), k=5) == 2


def test_majority_vote_among_equidistant_rows():
    train_X = np.eye(5)
    assert knn_predict(train_X, np.array([0, 0, 0, 1, 1]), np.zeros(5), k=5) == 0


def test_distance_ties_go_to_lower_training_index():
    # all five rows are at distance 1; the first three vote
    train_X = np.eye(5)
    assert knn_predict(train_X, np.array([1, 1, 0, 0, 0]), np.zeros(5), k=3) == 1


@pytest.mark.parametrize(
    "xs, expected",
    [
        ([1.0, -1.0, 2.0, -2.0], 0),  # equal counts, equal sums -> smaller label
        ([1.0, -1.0, 3.0, -2.0], 0),  # label 0 is closer in total
        ([1.0, -1.0, 2.0, -3.0], 1),  # label 1 is closer in total
    ],
)
def test_vote_ties_break_on_summed_distance_then_label(xs, expected):
    train_X = np.array(xs).reshape(-1, 1)
    train_y = np.array([1, 0, 1, 0])
    assert knn_predict(train_X, train_y, np.array([0.0]), k=4) == expected


def test_k_larger_than_training_set_uses_everything():
    train_X = np.array([[0.0], [1.0], [5.0]])
    train_y = np.array([1, 1, 0])
    assert knn_predict(train_X, train_y, np.array([4.9]), k=10) == 1


def test_zero_selected_columns_is_degenerate():
    with pytest.raises(DegenerateGenomeError):
        knn_predict_batch(np.empty((4, 0)), np.array([0, 1, 0, 1]), np.empty((1, 0)))


def test_leave_one_out_never_counts_the_row_itself():
    # each row's only close neighbour has the other label
    train_X = np.array([[0.0], [0.1], [10.0], [10.1]])
    train_y = np.array([0, 1, 0, 1])
    predictions = knn_predict_batch(train_X, train_y, train_X, k=1, leave_one_out=True)
    assert predictions.tolist() == [1, 0, 1, 0]
    plain = knn_predict_batch(train_X, train_y, train_X, k=1)
    assert plain.tolist() == train_y.tolist()


def test_leave_one_out_requires_the_training_matrix():
    X = np.zeros((3, 1))
    with pytest.raises(ValueError):
        knn_predict_batch(X, np.array([0, 1, 0]), np.zeros((2, 1)), leave_one_out=True)


@pytest.mark.parametrize("leave_one_out", [False, True])
def test_matches_brute_force_on_random_instances(leave_one_out):
    gen = make_rng(99)
    for trial in range(200):
        n_train = int(gen.integers(2, 201))
        s = int(gen.integers(1, 51))
        n_classes = int(gen.integers(2, 4))
        k = int(gen.integers(1, 8))
        if trial % 2:
            # small integers make distance ties common
            train_X = gen.integers(0, 3, size=(n_train, s)).astype(float)
        else:
            train_X = gen.normal(size=(n_train, s))
        train_y = gen.integers(0, n_classes, n_train)
        query_X = train_X if leave_one_out else gen.integers(0, 3, size=(7, s)).astype(float)

        got = knn_predict_batch(
            train_X, train_y, query_X, k=k, leave_one_out=leave_one_out, n_classes=n_classes
        )
        assert got.tolist() == brute_knn(train_X, train_y, query_X, k, leave_one_out)
