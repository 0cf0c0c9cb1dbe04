"""Self-checks behind the ``verify`` subcommand."""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import prod

from .bordism_ring import BordismElement, ONE, char_vector, from_char_vector
from .charnum import (
    char_matrix,
    determinant,
    diagonal_value,
    is_lower_triangular,
    refinement_support_holds,
    symbolic_characteristic_number,
)
from .partitions import enumerate_partitions

MAX_VERIFY_N = 14


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


def random_element(rng: random.Random, n: int, terms: int = 4, spread: int = 9) -> BordismElement:
    parts = enumerate_partitions(n)
    coeffs = {}
    for _ in range(terms):
        coeffs[rng.choice(parts)] = rng.randint(-spread, spread)
    return BordismElement(coeffs)


def _random_mixed(rng, max_n):
    e = BordismElement()
    for n in rng.sample(range(0, max_n + 1), k=min(3, max_n + 1)):
        if enumerate_partitions(n):
            e = e + random_element(rng, n, terms=2, spread=5)
    return e


def _entries(n, fault):
    mat = char_matrix(n)
    rows = [list(r) for r in mat.entries]
    if fault is not None and fault[0] == n:
        _, m, nu = fault
        rows[mat.order.index(m)][mat.order.index(nu)] += 1
    return mat.order, rows


def run_checks(max_n: int, fault=None, seed: int = 0) -> list:
    """Run the invariant suites for 2 <= n <= max_n.

    ``fault`` is ``(n, m, nu)``: corrupt that matrix entry by +1 before
    checking, as a negative control.
    """
    if max_n > MAX_VERIFY_N:
        raise ValueError(f"max_n is capped at {MAX_VERIFY_N}")
    rng = random.Random(seed)
    checks = []
    ns = range(2, max_n + 1)

    bad = None
    for n in ns:
        order, rows = _entries(n, fault)
        for i, m in enumerate(order):
            for j, nu in enumerate(order):
                if rows[i][j] != symbolic_characteristic_number(m, nu):
                    bad = bad or (n, m, nu, rows[i][j])
    checks.append(Check(
        "oracle equivalence",
        bad is None,
        "" if bad is None else f"n={bad[0]} m=({bad[1]}) nu=({bad[2]}): fast={bad[3]}",
    ))

    bad = None
    for n in ns:
        mat = char_matrix(n)
        if not (is_lower_triangular(mat) and refinement_support_holds(mat)):
            bad = bad or n
    checks.append(Check("triangularity", bad is None, "" if bad is None else f"n={bad}"))

    bad = None
    for n in ns:
        mat = char_matrix(n)
        diag_ok = all(mat.entries[i][i] == diagonal_value(p) for i, p in enumerate(mat.order))
        expected = prod(diagonal_value(p) for p in mat.order)
        det = determinant(mat)
        if not (diag_ok and det == expected and det > 0):
            bad = bad or (n, det, expected)
    checks.append(Check(
        "determinant formula",
        bad is None,
        "" if bad is None else f"n={bad[0]} det={bad[1]} expected={bad[2]}",
    ))

    ring_ok = True
    for _ in range(50):
        a, b, c = (_random_mixed(rng, max_n) for _ in range(3))
        ring_ok &= (a * b) * c == a * (b * c)
        ring_ok &= a * b == b * a
        ring_ok &= a * (b + c) == a * b + a * c
        ring_ok &= a * ONE == a and a + BordismElement() == a
    checks.append(Check("ring laws", ring_ok))

    bad = None
    for n in ns:
        for _ in range(10):
            e = random_element(rng, n)
            v = char_vector(e, n)
            if from_char_vector(v) != e or char_vector(from_char_vector(v), n) != v:
                bad = bad or (n, e)
    checks.append(Check("round trips", bad is None, "" if bad is None else f"n={bad[0]} e={bad[1]}"))
    return checks
