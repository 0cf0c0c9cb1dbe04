import pytest
from hypothesis import given, strategies as st

from bordismq.partitions import (
    EMPTY,
    Partition,
    concat,
    enumerate_partitions,
    index_map,
    order_key,
    p_prime,
    refines,
)
from strategies import brute_partitions, brute_refines, restricted_partition_counts

P = Partition.of


def test_enumerate_n6_matches_worked_example():
    assert enumerate_partitions(6) == (P([2, 2, 2]), P([3, 3]), P([2, 4]), P([6]))


@pytest.mark.parametrize("n, expected", [
    (2, [(2,)]),
    (7, [(2, 2, 3), (3, 4), (2, 5), (7)]),
    (0, [()]),
    (1, []),
])
def test_enumerate_small(n, expected):
    expected = [P(x if isinstance(x, tuple) else (x,)) for x in expected]
    assert list(enumerate_partitions(n)) == expected


@pytest.mark.parametrize("n", range(0, 19))
def test_enumerate_matches_brute_force(n):
    got = enumerate_partitions(n)
    assert set(got) == brute_partitions(n)
    assert len(set(got)) == len(got)
    assert list(got) == sorted(got, key=order_key)


@pytest.mark.parametrize("n, count", [(6, 4), (2, 1), (4, 2), (1, 0), (0, 1)])
def test_p_prime_values(n, count):
    assert p_prime(n) == count


def test_p_prime_generating_function():
    coeffs = restricted_partition_counts(30)
    assert [p_prime(n) for n in range(31)] == coeffs


def test_refines_examples():
    assert refines(P([2, 2, 2]), P([2, 4]))
    assert refines(P([3, 3]), P([3, 3]))
    assert not refines(P([3, 3]), P([2, 4]))
    assert not refines(P([2, 4]), P([2, 2, 2]))
    assert not refines(P([2, 2]), P([6]))


@pytest.mark.parametrize("n", range(2, 11))
def test_refines_matches_brute_force(n):
    parts = enumerate_partitions(n)
    for p in parts:
        for q in parts:
            assert refines(p, q) == brute_refines(p, q), (p, q)


@pytest.mark.parametrize("n", range(2, 15))
def test_order_extends_refinement(n):
    idx = index_map(n)
    for p in idx:
        for q in idx:
            if p != q and refines(p, q):
                assert idx[p] < idx[q]
                assert p.length > q.length


@pytest.mark.parametrize("n", range(2, 11))
def test_refines_reflexive_and_transitive(n):
    parts = enumerate_partitions(n)
    rel = {(p, q) for p in parts for q in parts if refines(p, q)}
    assert all((p, p) in rel for p in parts)
    for (a, b) in rel:
        for c in parts:
            if (b, c) in rel:
                assert (a, c) in rel


def test_concat():
    assert concat(P([2]), P([4])) == P([2, 4])
    assert concat(P([2, 2]), EMPTY) == P([2, 2])
    assert concat(P([3, 3]), P([2, 4])) == P([2, 3, 3, 4])


@given(st.lists(st.integers(2, 9), max_size=6), st.lists(st.integers(2, 9), max_size=6))
def test_concat_adds_weight(xs, ys):
    pq = concat(P(xs), P(ys))
    assert pq.weight == sum(xs) + sum(ys)
    assert list(pq.parts) == sorted(xs + ys)


def test_invalid_partitions():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((4, 2))
    with pytest.raises(ValueError):
        enumerate_partitions(-1)


def test_json_form():
    assert P([4, 2, 2]).to_json() == [2, 2, 4]
    assert EMPTY.to_json() == []
