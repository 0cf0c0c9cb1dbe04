"""Characteristic numbers of exterior products of sphere generators.

The number ``<ch_{m_1} ... ch_{m_s}(xi^(n_1) ⊠ ... ⊠ xi^(n_r)), [S^{2n_1} x ... x S^{2n_r}]>``
counts the maps f from factors to blocks of m with sum_{f(i)=j} n_i = m_j.
Blocks are labelled even when parts of m repeat, since the ch factors are
multiplied as separate classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import factorial, prod

from . import cohomology as coh
from .kclass import exterior_all, generator_bundle
from .partitions import Partition, enumerate_partitions, refines


def ch_boxtimes_generators(nu: Partition) -> coh.CohClass:
    """Total ch of xi^(n_1) ⊠ ... ⊠ xi^(n_r), i.e. (1 + iota_1)...(1 + iota_r)."""
    return exterior_all(generator_bundle(n) for n in nu.parts).ch


@lru_cache(maxsize=None)
def _count(factors: tuple, remaining: tuple) -> int:
    if not factors:
        return 1 if not any(remaining) else 0
    head, rest = factors[0], factors[1:]
    total = 0
    for j, room in enumerate(remaining):
        if room >= head:
            total += _count(rest, remaining[:j] + (room - head,) + remaining[j + 1:])
    return total


def characteristic_number(m: Partition, nu: Partition) -> int:
    if m.weight != nu.weight:
        raise ValueError(f"weight mismatch: {m} has weight {m.weight}, {nu} has {nu.weight}")
    # largest factors first prunes earliest
    return _count(tuple(sorted(nu.parts, reverse=True)), m.parts)


def symbolic_characteristic_number(m: Partition, nu: Partition) -> Fraction:
    """Same number, by expanding the cohomology product term by term."""
    if m.weight != nu.weight:
        raise ValueError(f"weight mismatch: {m} vs {nu}")
    ch = ch_boxtimes_generators(nu)
    base = ch.base
    factors = [coh.graded_component(ch, 2 * mj) for mj in m.parts]
    product = reduce(coh.multiply, factors, coh.unit(base))
    return coh.pair_fundamental(product)


def diagonal_value(p: Partition) -> int:
    """prod of (multiplicity)! over distinct parts."""
    return prod(factorial(k) for k in p.multiplicities().values())


@dataclass(frozen=True)
class CharMatrix:
    """Rows are ch-monomials m, columns are sphere products nu, both in canonical order."""

    n: int
    order: tuple
    entries: tuple

    @property
    def size(self) -> int:
        return len(self.order)

    def entry(self, m: Partition, nu: Partition) -> int:
        return self.entries[self.order.index(m)][self.order.index(nu)]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "order": [p.to_json() for p in self.order],
            "matrix": [list(row) for row in self.entries],
            "det": determinant(self),
        }


@lru_cache(maxsize=None)
def char_matrix(n: int) -> CharMatrix:
    order = enumerate_partitions(n)
    entries = tuple(tuple(characteristic_number(m, nu) for nu in order) for m in order)
    return CharMatrix(n, order, entries)


def bareiss_determinant(rows) -> int:
    """Fraction-free Gaussian elimination over the integers."""
    a = [list(r) for r in rows]
    size = len(a)
    if size == 0:
        return 1
    sign, prev = 1, 1
    for k in range(size - 1):
        if a[k][k] == 0:
            for i in range(k + 1, size):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def determinant(mat: CharMatrix) -> int:
    return bareiss_determinant(mat.entries)


def is_lower_triangular(mat: CharMatrix) -> bool:
    return all(
        mat.entries[i][j] == 0 for i in range(mat.size) for j in range(i + 1, mat.size)
    )


def refinement_support_holds(mat: CharMatrix) -> bool:
    """Nonzero entries appear exactly where the column partition refines the row partition."""
    for i, m in enumerate(mat.order):
        for j, nu in enumerate(mat.order):
            if (mat.entries[i][j] != 0) != refines(nu, m):
                return False
    return True


def render_table(mat: CharMatrix) -> str:
    """Plain-text table: sphere products across the top, ch-monomials down the side."""
    headers = [str(coh.SphereProduct(nu.parts)) for nu in mat.order]
    labels = [str(m) for m in mat.order]
    label_w = max([len(s) for s in labels] + [1])
    widths = [max(len(h), *(len(str(row[j])) for row in mat.entries)) for j, h in enumerate(headers)]
    lines = [" " * label_w + "  " + "  ".join(h.rjust(w) for h, w in zip(headers, widths))]
    for label, row in zip(labels, mat.entries):
        lines.append(label.ljust(label_w) + "  " + "  ".join(str(x).rjust(w) for x, w in zip(row, widths)))
    return "\n".join(lines)
