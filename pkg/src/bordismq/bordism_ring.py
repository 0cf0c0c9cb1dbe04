"""The rational bordism ring of pairs, Q[t_2, t_3, ...] with deg t_n = 2n.

Elements are sparse maps from partitions to rationals; the partition
(n_1, ..., n_r) stands for the monomial t_{n_1} ... t_{n_r}. Only the
rationalized ring is modelled. Torsion is invisible to characteristic
numbers and is not represented.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from . import cohomology as coh
from .charnum import char_matrix, characteristic_number
from .kclass import VirtualClass
from .partitions import EMPTY, Partition, concat, enumerate_partitions, p_prime
from .serialize import rational_from_json, rational_to_json


class BordismElement:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        for p, c in (coeffs or {}).items():
            if not isinstance(p, Partition):
                p = Partition.of(p)
            c = Fraction(c)
            if c:
                clean[p] = clean.get(p, 0) + c
        self.coeffs = {p: c for p, c in clean.items() if c}

    @classmethod
    def monomial(cls, parts, coeff=1) -> "BordismElement":
        return cls({Partition.of(parts): coeff})

    def is_zero(self) -> bool:
        return not self.coeffs

    def homogeneous(self, n: int) -> "BordismElement":
        """Degree-2n part."""
        return BordismElement({p: c for p, c in self.coeffs.items() if p.weight == n})

    def degrees(self) -> set:
        return {2 * p.weight for p in self.coeffs}

    def __eq__(self, other):
        if not isinstance(other, BordismElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        if not isinstance(other, BordismElement):
            return NotImplemented
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = out.get(p, 0) + c
        return BordismElement(out)

    def __neg__(self):
        return BordismElement({p: -c for p, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BordismElement({p: c * other for p, c in self.coeffs.items()})
        if not isinstance(other, BordismElement):
            return NotImplemented
        out: dict = {}
        for p, a in self.coeffs.items():
            for q, b in other.coeffs.items():
                pq = concat(p, q)
                out[pq] = out.get(pq, 0) + a * b
        return BordismElement(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __repr__(self):
        return f"BordismElement({format_element(self)})"

    def to_json(self) -> list:
        return [
            {"monomial": p.to_json(), "coeff": rational_to_json(c)}
            for p, c in sorted(self.coeffs.items(), key=lambda kv: (kv[0].weight, -kv[0].length, kv[0].parts))
        ]

    @classmethod
    def from_json(cls, records) -> "BordismElement":
        out: dict = {}
        for rec in records:
            p = Partition.of(rec["monomial"])
            out[p] = out.get(p, 0) + rational_from_json(rec["coeff"])
        return cls(out)


def format_element(e: BordismElement) -> str:
    if e.is_zero():
        return "0"
    pieces = []
    for p, c in sorted(e.coeffs.items(), key=lambda kv: (kv[0].weight, -kv[0].length, kv[0].parts)):
        word = "·".join(f"t{x}" for x in p.parts)
        if not word:
            pieces.append(str(c))
        elif c == 1:
            pieces.append(word)
        elif c == -1:
            pieces.append("-" + word)
        else:
            pieces.append(f"{c}·{word}")
    return " + ".join(pieces).replace("+ -", "- ")


ZERO = BordismElement()
ONE = BordismElement({EMPTY: 1})


def t(n: int) -> BordismElement:
    """The generator t_n, class of (S^{2n}, xi^(n))."""
    if n < 2:
        raise ValueError("generators t_n exist for n >= 2")
    return BordismElement.monomial((n,))


def add(a: BordismElement, b: BordismElement) -> BordismElement:
    return a + b


def scale(a: BordismElement, q) -> BordismElement:
    return a * Fraction(q)


def multiply(a: BordismElement, b: BordismElement) -> BordismElement:
    return a * b


@dataclass(frozen=True)
class CharVector:
    """Characteristic numbers of a degree-2n class, keyed by ch-monomial."""

    n: int
    values: dict

    def __post_init__(self):
        expected = set(enumerate_partitions(self.n))
        keys = set(self.values)
        if keys != expected:
            missing = sorted(map(str, expected - keys))
            extra = sorted(map(str, keys - expected))
            raise ValueError(f"char vector keys must be the partitions of {self.n}; missing {missing}, unexpected {extra}")
        object.__setattr__(self, "values", {p: Fraction(self.values[p]) for p in enumerate_partitions(self.n)})

    def as_list(self) -> list:
        return [self.values[p] for p in enumerate_partitions(self.n)]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "values": [{"partition": p.to_json(), "value": rational_to_json(v)} for p, v in self.values.items()],
        }

    @classmethod
    def from_json(cls, data) -> "CharVector":
        try:
            n = int(data["n"])
            records = data["values"]
        except (KeyError, TypeError) as exc:
            raise ValueError("char vector JSON needs 'n' and 'values'") from exc
        values = {}
        for rec in records:
            p = Partition.of(rec["partition"])
            if p in values:
                raise ValueError(f"duplicate partition {p}")
            values[p] = rational_from_json(rec["value"])
        return cls(n, values)


def char_vector(e: BordismElement, n: int) -> CharVector:
    """Characteristic numbers of the degree-2n component of ``e``."""
    part = e.homogeneous(n)
    values = {}
    for m in enumerate_partitions(n):
        values[m] = sum((c * characteristic_number(m, p) for p, c in part.coeffs.items()), Fraction(0))
    return CharVector(n, values)


def from_char_vector(v: CharVector) -> BordismElement:
    """Unique degree-2n element with the given characteristic numbers.

    The matrix is lower triangular in canonical order, so forward
    substitution gives the t-coefficients exactly.
    """
    mat = char_matrix(v.n)
    rhs = v.as_list()
    x = []
    for i in range(mat.size):
        acc = rhs[i] - sum((mat.entries[i][j] * x[j] for j in range(i) if mat.entries[i][j]), Fraction(0))
        x.append(acc / mat.entries[i][i])
    return BordismElement(dict(zip(mat.order, x)))


def characteristic_numbers_of(c: VirtualClass) -> CharVector:
    n = sum(c.base.factor_degrees)
    values = {}
    for m in enumerate_partitions(n):
        factors = [coh.graded_component(c.ch, 2 * mj) for mj in m.parts]
        values[m] = coh.pair_fundamental(reduce(coh.multiply, factors, coh.unit(c.base)))
    return CharVector(n, values)


def bordism_class_of(c: VirtualClass) -> BordismElement:
    """Class of (sphere product, c) in the rational bordism ring."""
    if not c.is_unit:
        raise ValueError(f"virtual dimension is {c.dimension}, expected 1")
    return from_char_vector(characteristic_numbers_of(c))


def rank(d: int) -> int:
    """Rank of the degree-d part: 0 for odd d, p'(d/2) otherwise."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return 0 if d % 2 else p_prime(d // 2)
