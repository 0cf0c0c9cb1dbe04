"""Partitions of an integer into parts >= 2.

A :class:`Partition` indexes both the t-monomials of the bordism ring and the
ch-monomials used for characteristic numbers. Parts are stored ascending.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache


@dataclass(frozen=True)
class Partition:
    """Ascending tuple of integer parts, each at least 2.

    The empty partition is allowed and stands for the unit monomial.
    """

    parts: tuple = ()
    weight: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x < 2 for x in parts):
            raise ValueError(f"partition parts must be >= 2, got {parts}")
        if list(parts) != sorted(parts):
            raise ValueError(f"partition parts must be ascending, got {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "weight", sum(parts))

    @classmethod
    def of(cls, parts) -> "Partition":
        """Build from parts in any order."""
        return cls(tuple(sorted(int(x) for x in parts)))

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> dict:
        mult: dict = {}
        for x in self.parts:
            mult[x] = mult.get(x, 0) + 1
        return mult

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return " ".join(map(str, self.parts)) if self.parts else "()"

    def to_json(self) -> list:
        return list(self.parts)


EMPTY = Partition(())


def order_key(p: Partition) -> tuple:
    """Sort key of the canonical total order.

    Longer partitions first; equal lengths compare element-wise with the
    larger entry first. Since a proper refinement is strictly longer, this
    order extends refinement.
    """
    return (-p.length, tuple(-x for x in p.parts))


def _ascending(n, smallest):
    if n == 0:
        yield ()
        return
    for first in range(smallest, n + 1):
        rest = n - first
        if rest != 0 and rest < first:
            continue
        for tail in _ascending(rest, first):
            yield (first,) + tail


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple:
    """All partitions of ``n`` into parts >= 2, in canonical order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    found = [Partition(parts) for parts in _ascending(n, 2)]
    return tuple(sorted(found, key=order_key))


def p_prime(n: int) -> int:
    """Number of partitions of ``n`` with no part equal to 1."""
    return len(enumerate_partitions(n))


def index_map(n: int) -> dict:
    return {p: i for i, p in enumerate(enumerate_partitions(n))}


@lru_cache(maxsize=None)
def _can_fill(parts: tuple, capacities: tuple) -> bool:
    # parts descending, capacities sorted; both canonical so the cache hits
    if not parts:
        return all(c == 0 for c in capacities)
    head, rest = parts[0], parts[1:]
    tried = set()
    for i, cap in enumerate(capacities):
        if cap < head or cap in tried:
            continue
        tried.add(cap)
        left = capacities[:i] + (cap - head,) + capacities[i + 1:]
        if _can_fill(rest, tuple(sorted(left))):
            return True
    return False


def refines(p: Partition, q: Partition) -> bool:
    """True iff the parts of ``p`` group into blocks summing to the parts of ``q``."""
    if p.weight != q.weight or p.length < q.length:
        return False
    return _can_fill(tuple(sorted(p.parts, reverse=True)), tuple(sorted(q.parts)))


def concat(p: Partition, q: Partition) -> Partition:
    return Partition(tuple(sorted(p.parts + q.parts)))
