from functools import lru_cache

import pytest
from hypothesis import given

from boxball.core import Permutation, Tableau, partitions_of, row_reading_word, standard_tableaux
from boxball.knuth import knuth_class, knuth_neighbors
from boxball.rs import RsPair, enumerate_qhat_class, insertion_tableau, inverse_rs, qhat_tableau, rs_insert

from conftest import perms, permutations_st


def P(text):
    return Permutation.parse(text)


@pytest.mark.parametrize(
    "w, p, q",
    [
        ("452361", [[1, 3, 6], [2, 5], [4]], [[1, 2, 5], [3, 4], [6]]),
        ("5623714", [[1, 3, 4], [2, 6, 7], [5]], [[1, 2, 5], [3, 4, 7], [6]]),
        ("12345", [[1, 2, 3, 4, 5]], [[1, 2, 3, 4, 5]]),
    ],
)
def test_rs_insert(w, p, q):
    pair = rs_insert(P(w))
    assert pair == RsPair(Tableau(p), Tableau(q))


@pytest.mark.parametrize("n", range(1, 9))
def test_reading_word_inserts_to_its_tableau(n):
    for sh in partitions_of(n):
        for t in standard_tableaux(sh):
            assert insertion_tableau(row_reading_word(t)) == t


def test_inverse_rs_running_example():
    pair = RsPair(Tableau([[1, 3, 6], [2, 5], [4]]), Tableau([[1, 2, 5], [3, 4], [6]]))
    assert inverse_rs(pair) == P("452361")


def test_inverse_rs_on_equal_tableaux_gives_involutions():
    for n in range(1, 7):
        for sh in partitions_of(n):
            for t in standard_tableaux(sh):
                w = inverse_rs(RsPair(t, t))
                assert rs_insert(w) == RsPair(t, t)
                assert all(w[w[i] - 1] == i + 1 for i in range(n))


def test_inverse_rs_errors():
    with pytest.raises(ValueError):
        inverse_rs(RsPair(Tableau([[1, 2], [3]]), Tableau([[1, 2, 3]])))
    with pytest.raises(ValueError):
        inverse_rs(RsPair(Tableau([[2, 1], [3]]), Tableau([[1, 2], [3]])))


@pytest.mark.parametrize("n", range(1, 9))
def test_round_trip(n):
    for w in perms(n):
        assert inverse_rs(rs_insert(w)) == w


@given(permutations_st(max_n=30))
def test_round_trip_random(w):
    assert inverse_rs(rs_insert(w)) == w


def test_shape_222_fibre_is_knuth_class_of_362514():
    p = Tableau([[1, 4], [2, 5], [3, 6]])
    fibre = sorted(inverse_rs(RsPair(p, q)) for q in standard_tableaux((2, 2, 2)))
    assert fibre == knuth_class(P("362514"))
    assert len(fibre) == 5


def test_qhat_tableau():
    assert qhat_tableau(7) == Tableau([[1, 2, 5, 6], [3, 4], [7]])
    with pytest.raises(ValueError):
        qhat_tableau(4)
    with pytest.raises(ValueError):
        enumerate_qhat_class(4)


def test_qhat_class_examples():
    assert enumerate_qhat_class(5) == sorted(P(w) for w in ["45132", "25143", "35142", "45231", "35241"])
    listed = (
        "451362 251463 351462 452361 352461 561243 261354 361254 "
        "461253 561342 261453 361452 461352 562341 362451 462351"
    ).split()
    assert enumerate_qhat_class(6) == sorted(P(w) for w in listed)


@lru_cache(maxsize=None)
def _syt_count(shape):
    """Count standard tableaux by removing the cell holding the largest entry."""
    if sum(shape) <= 1:
        return 1
    total = 0
    for i, part in enumerate(shape):
        below = shape[i + 1] if i + 1 < len(shape) else 0
        if part > below:
            smaller = list(shape)
            smaller[i] -= 1
            total += _syt_count(tuple(p for p in smaller if p))
    return total


@pytest.mark.parametrize("n", range(5, 10))
def test_qhat_class_sizes_and_structure(n):
    members = enumerate_qhat_class(n)
    assert len(members) == _syt_count((n - 3, 2, 1))
    qhat = qhat_tableau(n)
    for w in members:
        assert rs_insert(w).q == qhat
        w1, w2, w3, w4, wn = w[0], w[1], w[2], w[3], w[-1]
        assert all(a < b for a, b in zip(w[2:n - 1], w[3:n - 1]))
        assert wn < w2 and w1 < w2 and w3 < w1 and w3 < w2 and w4 < w2


def test_qhat_counts_frozen():
    # A077415 values at n = 5..9
    assert [len(enumerate_qhat_class(n)) for n in range(5, 10)] == [5, 16, 35, 64, 105]


@pytest.mark.parametrize("n", range(2, 8))
def test_knuth_moves_preserve_insertion_tableau(n):
    for w in perms(n):
        p = insertion_tableau(w)
        for v, _ in knuth_neighbors(w):
            assert insertion_tableau(v) == p
