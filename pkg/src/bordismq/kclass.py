"""Virtual SU-bundles over sphere products, modelled by their Chern character.

Rationally a virtual bundle on these spaces is determined by ``ch``, so a
:class:`VirtualClass` is just a base plus a :class:`CohClass`. Direct sum is
addition of ``ch``, tensor product is multiplication. Classes of virtual
dimension 1 ("unit classes") form a group under tensor product.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .cohomology import CohClass, SphereProduct, MAX_FACTORS, graded_component, unit


class NotAUnitClass(ValueError):
    pass


class VirtualClass:
    __slots__ = ("base", "ch")

    def __init__(self, base: SphereProduct, ch: CohClass):
        if ch.base != base:
            raise ValueError("ch lives on a different base")
        if not graded_component(ch, 2).is_zero():
            raise ValueError("ch_1 must vanish for an SU class")
        self.base = base
        self.ch = ch

    @property
    def dimension(self) -> Fraction:
        return self.ch.coeff(0)

    @property
    def is_unit(self) -> bool:
        return self.dimension == 1

    def reduced(self) -> CohClass:
        """``ch`` minus its degree-0 part."""
        return CohClass(self.base, {m: c for m, c in self.ch.terms.items() if m})

    def __eq__(self, other):
        if not isinstance(other, VirtualClass):
            return NotImplemented
        return self.base == other.base and self.ch == other.ch

    def __hash__(self):
        return hash(self.ch)

    def __add__(self, other):
        if not isinstance(other, VirtualClass):
            return NotImplemented
        return VirtualClass(self.base, self.ch + other.ch)

    def __neg__(self):
        return VirtualClass(self.base, -self.ch)

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k):
        if isinstance(k, (int, Fraction)):
            return VirtualClass(self.base, k * self.ch)
        return NotImplemented

    def __repr__(self):
        from .cohomology import format_class

        return f"VirtualClass({self.base}: ch = {format_class(self.ch)})"

    def to_json(self) -> dict:
        return {"base": list(self.base.factor_degrees), "ch": self.ch.to_json()}

    @classmethod
    def from_json(cls, data) -> "VirtualClass":
        base = SphereProduct(tuple(data["base"]))
        return cls(base, CohClass.from_json(base, data["ch"]))


def _require_unit(a: VirtualClass):
    if not a.is_unit:
        raise NotAUnitClass(f"virtual dimension is {a.dimension}, expected 1")


def unit_class(base: SphereProduct) -> VirtualClass:
    return VirtualClass(base, unit(base))


def generator_bundle(n: int) -> VirtualClass:
    """The generator over S^{2n}: ``ch = 1 + iota_n``."""
    if n < 2:
        raise ValueError("generator bundles exist for n >= 2")
    base = SphereProduct((n,))
    return VirtualClass(base, CohClass(base, {0: 1, 1: 1}))


def tensor(a: VirtualClass, b: VirtualClass) -> VirtualClass:
    return VirtualClass(a.base, a.ch * b.ch)


def inverse(a: VirtualClass) -> VirtualClass:
    """Tensor inverse of a unit class, ``1 - x + x^2 - ...`` for ``a = 1 + x``.

    ``x`` has no degree-0 term, so ``x^(r+1) = 0`` on an r-factor base.
    """
    _require_unit(a)
    x = a.reduced()
    total = unit(a.base)
    term = unit(a.base)
    for _ in range(a.base.r):
        term = -(term * x)
        if term.is_zero():
            break
        total = total + term
    return VirtualClass(a.base, total)


def power(a: VirtualClass, k: int) -> VirtualClass:
    _require_unit(a)
    if k < 0:
        return power(inverse(a), -k)
    result = unit_class(a.base)
    sq = a
    while k:
        if k & 1:
            result = tensor(result, sq)
        k >>= 1
        if k:
            sq = tensor(sq, sq)
    return result


def exterior(a: VirtualClass, b: VirtualClass) -> VirtualClass:
    """External tensor product over the product of the two bases."""
    if a.base.r + b.base.r > MAX_FACTORS:
        raise ValueError(f"product would have more than {MAX_FACTORS} factors")
    base = a.base * b.base
    shift = a.base.r
    terms = {}
    for s, x in a.ch.terms.items():
        for t, y in b.ch.terms.items():
            terms[s | (t << shift)] = x * y
    return VirtualClass(base, CohClass(base, terms))


def exterior_all(classes) -> VirtualClass:
    result = unit_class(SphereProduct(()))
    for c in classes:
        result = exterior(result, c)
    return result


def bezout(k: int, m: int) -> tuple:
    """Return ``(u, v)`` with ``u*k + v*m == 1`` and ``|u|`` minimal.

    Ties break towards positive ``u``.
    """
    if k <= 0 or m <= 0:
        raise ValueError("k and m must be positive")
    if gcd(k, m) != 1:
        raise ValueError(f"gcd({k}, {m}) != 1")
    if m == 1:
        return 0, 1
    u = pow(k, -1, m)
    if u > m // 2:
        u -= m
    v = (1 - u * k) // m
    return u, v


def reconstruct_unit(k: int, m: int, xi_k: VirtualClass, xi_m: VirtualClass, uv=None) -> VirtualClass:
    """Recover the unit class ``c`` from its multiples ``k*c`` and ``m*c``.

    ``uv`` overrides the Bezout pair; any valid pair gives the same answer.
    """
    if k <= 0 or m <= 0 or gcd(k, m) != 1:
        raise ValueError(f"need coprime positive k, m; got {k}, {m}")
    if xi_k.dimension != k or xi_m.dimension != m:
        raise ValueError(
            f"dimensions {xi_k.dimension}, {xi_m.dimension} do not match k={k}, m={m}"
        )
    if m * xi_k != k * xi_m:
        raise ValueError("m*xi_k != k*xi_m; the classes are not multiples of one unit class")
    if uv is None:
        u, v = bezout(k, m)
    else:
        u, v = uv
        if u * k + v * m != 1:
            raise ValueError(f"({u}, {v}) is not a Bezout pair for ({k}, {m})")
    return u * xi_k + v * xi_m
