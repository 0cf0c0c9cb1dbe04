"""Shared hypothesis strategies and brute-force oracles."""

from fractions import Fraction
from itertools import combinations_with_replacement, product

from hypothesis import strategies as st

from bordismq.cohomology import CohClass, SphereProduct
from bordismq.kclass import VirtualClass
from bordismq.partitions import Partition

small_rationals = st.builds(
    Fraction, st.integers(-6, 6), st.integers(1, 4)
)


def bases(max_r=3, max_n=5):
    return st.lists(st.integers(2, max_n), min_size=0, max_size=max_r).map(
        lambda xs: SphereProduct(tuple(xs))
    )


@st.composite
def classes_on(draw, base):
    masks = list(range(1 << base.r))
    terms = draw(st.dictionaries(st.sampled_from(masks), small_rationals, max_size=len(masks)))
    return CohClass(base, terms)


@st.composite
def unit_classes(draw, base):
    c = draw(classes_on(base))
    terms = {m: v for m, v in c.terms.items() if m}
    terms[0] = 1
    return VirtualClass(base, CohClass(base, terms))


def brute_partitions(n):
    """Every multiset of parts >= 2 summing to n, by exhaustive search."""
    out = set()
    for length in range(0, n // 2 + 1):
        for combo in combinations_with_replacement(range(2, n + 1), length):
            if sum(combo) == n:
                out.add(Partition(combo))
    return out


def brute_refines(p, q):
    """Try every labelled assignment of p's parts to q's blocks."""
    if p.weight != q.weight:
        return False
    for f in product(range(q.length), repeat=p.length):
        sums = [0] * q.length
        for part, block in zip(p.parts, f):
            sums[block] += part
        if sorted(sums) == list(q.parts):
            return True
    return False


def restricted_partition_counts(limit):
    """Coefficients of prod_{k>=2} 1/(1 - x^k) up to x^limit."""
    coeffs = [1] + [0] * limit
    for k in range(2, limit + 1):
        for i in range(k, limit + 1):
            coeffs[i] += coeffs[i - k]
    return coeffs
