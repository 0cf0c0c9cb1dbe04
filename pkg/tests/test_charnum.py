import random
from itertools import permutations
from math import factorial, prod

import pytest

from bordismq import cohomology as coh
from bordismq.charnum import (
    CharMatrix,
    bareiss_determinant,
    ch_boxtimes_generators,
    char_matrix,
    characteristic_number,
    determinant,
    diagonal_value,
    is_lower_triangular,
    render_table,
    symbolic_characteristic_number,
)
from bordismq.cohomology import SphereProduct
from bordismq.partitions import Partition, enumerate_partitions, refines

P = Partition.of


def leibniz_det(rows):
    size = len(rows)
    total = 0
    for perm in permutations(range(size)):
        inversions = sum(1 for i in range(size) for j in range(i + 1, size) if perm[i] > perm[j])
        total += (-1) ** inversions * prod(rows[i][perm[i]] for i in range(size))
    return total


def test_ch_of_triple_product():
    ch = ch_boxtimes_generators(P([2, 2, 2]))
    assert ch.base == SphereProduct((2, 2, 2))
    assert ch.terms == {m: 1 for m in range(8)}
    assert coh.graded_component(ch, 6).is_zero()
    assert coh.graded_component(ch, 10).is_zero()
    assert ch_boxtimes_generators(P([5])).terms == {0: 1, 1: 1}


@pytest.mark.parametrize("m, nu, value", [
    ((2, 2, 2), (2, 2, 2), 6),
    ((2, 4), (2, 2, 2), 3),
    ((6,), (2, 2, 2), 1),
    ((6,), (3, 3), 1),
    ((2, 2, 2), (3, 3), 0),
    ((3, 3), (3, 3), 2),
    ((2, 2, 4), (2, 2, 2, 2), 12),
])
def test_characteristic_number_examples(m, nu, value):
    m, nu = P(m), P(nu)
    assert symbolic_characteristic_number(m, nu) == value
    assert characteristic_number(m, nu) == value


def test_weight_mismatch():
    with pytest.raises(ValueError):
        characteristic_number(P([2]), P([3]))
    with pytest.raises(ValueError):
        symbolic_characteristic_number(P([2]), P([3]))


def test_matrix_n6():
    mat = char_matrix(6)
    assert [p.parts for p in mat.order] == [(2, 2, 2), (3, 3), (2, 4), (6,)]
    assert mat.entries == ((6, 0, 0, 0), (0, 2, 0, 0), (3, 0, 1, 0), (1, 1, 1, 1))
    assert determinant(mat) == 12
    assert mat.entry(P([2, 4]), P([2, 2, 2])) == 3


@pytest.mark.parametrize("n, rows, det", [
    (2, ((1,),), 1),
    (4, ((2, 0), (1, 1)), 2),
])
def test_small_matrices(n, rows, det):
    mat = char_matrix(n)
    assert mat.entries == rows
    assert determinant(mat) == det


@pytest.mark.parametrize("n", range(2, 10))
def test_fast_path_matches_oracle(n):
    for m in enumerate_partitions(n):
        for nu in enumerate_partitions(n):
            assert characteristic_number(m, nu) == symbolic_characteristic_number(m, nu)


@pytest.mark.parametrize("n", range(2, 13))
def test_nonzero_iff_refinement(n):
    for m in enumerate_partitions(n):
        for nu in enumerate_partitions(n):
            assert (characteristic_number(m, nu) != 0) == refines(nu, m)


@pytest.mark.parametrize("n", range(2, 15))
def test_diagonal_formula(n):
    for p in enumerate_partitions(n):
        assert characteristic_number(p, p) == diagonal_value(p) > 0


def test_diagonal_value():
    assert diagonal_value(P([2, 2, 2])) == factorial(3)
    assert diagonal_value(P([2, 2, 3, 3, 3, 5])) == 2 * 6
    assert diagonal_value(P([])) == 1


def test_order_independence():
    rng = random.Random(11)
    mat = char_matrix(8)
    order = list(mat.order)
    rng.shuffle(order)
    shuffled = [[characteristic_number(m, nu) for nu in order] for m in order]
    for i, m in enumerate(order):
        for j, nu in enumerate(order):
            assert shuffled[i][j] == mat.entry(m, nu)
    assert abs(bareiss_determinant(shuffled)) == determinant(mat)


def test_bareiss_against_leibniz():
    rng = random.Random(5)
    for _ in range(150):
        size = rng.randint(0, 6)
        rows = [[rng.randint(-4, 4) for _ in range(size)] for _ in range(size)]
        if rng.random() < 0.3 and size > 1:
            rows[0][0] = 0
        assert bareiss_determinant(rows) == leibniz_det(rows)


@pytest.mark.parametrize("n", [5, 6, 7])
def test_char_matrix_det_by_leibniz(n):
    mat = char_matrix(n)
    assert determinant(mat) == leibniz_det(mat.entries)


def test_triangular_and_json():
    mat = char_matrix(6)
    assert is_lower_triangular(mat)
    assert mat.to_json() == {
        "n": 6,
        "order": [[2, 2, 2], [3, 3], [2, 4], [6]],
        "matrix": [[6, 0, 0, 0], [0, 2, 0, 0], [3, 0, 1, 0], [1, 1, 1, 1]],
        "det": 12,
    }
    assert not is_lower_triangular(CharMatrix(4, enumerate_partitions(4), ((1, 1), (0, 1))))


def test_render_table_layout():
    lines = render_table(char_matrix(6)).splitlines()
    assert lines[0].split() == ["S^4×S^4×S^4", "S^6×S^6", "S^4×S^8", "S^12"]
    assert lines[1].split() == ["2", "2", "2", "6", "0", "0", "0"]
    assert lines[3].split() == ["2", "4", "3", "0", "1", "0"]
    assert lines[4].split() == ["6", "1", "1", "1", "1"]
