"""Rational cohomology of a product of even-dimensional spheres.

H*(S^{2n_1} x ... x S^{2n_r}; Q) has basis iota_S for subsets S of the
factors, with iota_S * iota_T = iota_{S u T} when S and T are disjoint and
zero otherwise. Subsets are bitmasks; bit i is factor i + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

MAX_FACTORS = 16


class BaseMismatch(ValueError):
    pass


@dataclass(frozen=True)
class SphereProduct:
    """The product S^{2 n_1} x ... x S^{2 n_r}; ``()`` is a point."""

    factor_degrees: tuple = ()

    def __post_init__(self):
        degrees = tuple(int(n) for n in self.factor_degrees)
        if any(n < 2 for n in degrees):
            raise ValueError(f"sphere factors need n >= 2, got {degrees}")
        if len(degrees) > MAX_FACTORS:
            raise ValueError(f"at most {MAX_FACTORS} factors supported, got {len(degrees)}")
        object.__setattr__(self, "factor_degrees", degrees)

    @property
    def r(self) -> int:
        return len(self.factor_degrees)

    @property
    def top_mask(self) -> int:
        return (1 << self.r) - 1

    @property
    def dimension(self) -> int:
        return 2 * sum(self.factor_degrees)

    def degree(self, mask: int) -> int:
        """Cohomological degree of iota_S."""
        return 2 * sum(n for i, n in enumerate(self.factor_degrees) if mask >> i & 1)

    def __mul__(self, other: "SphereProduct") -> "SphereProduct":
        return SphereProduct(self.factor_degrees + other.factor_degrees)

    def __str__(self):
        if not self.factor_degrees:
            return "pt"
        return "×".join(f"S^{2 * n}" for n in self.factor_degrees)


def mask_to_indices(mask: int) -> list:
    """1-based factor indices of a bitmask."""
    out, i = [], 0
    while mask:
        if mask & 1:
            out.append(i + 1)
        mask >>= 1
        i += 1
    return out


def indices_to_mask(indices) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << (int(i) - 1)
    return mask


class CohClass:
    """Element of H*(base; Q), stored sparsely as ``{mask: Fraction}``."""

    __slots__ = ("base", "terms")

    def __init__(self, base: SphereProduct, terms=None):
        clean = {}
        for mask, c in (terms or {}).items():
            if mask < 0 or mask > base.top_mask:
                raise ValueError(f"subset mask {mask} outside {base}")
            c = Fraction(c)
            if c:
                clean[mask] = c
        self.base = base
        self.terms = clean

    def coeff(self, mask: int) -> Fraction:
        return self.terms.get(mask, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other):
        if not isinstance(other, CohClass):
            return NotImplemented
        if other.base != self.base:
            raise BaseMismatch(f"{self.base} vs {other.base}")
        return None

    def __eq__(self, other):
        if not isinstance(other, CohClass):
            return NotImplemented
        return self.base == other.base and self.terms == other.terms

    def __hash__(self):
        return hash((self.base, frozenset(self.terms.items())))

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for mask, c in other.terms.items():
            out[mask] = out.get(mask, 0) + c
        return CohClass(self.base, out)

    def __neg__(self):
        return CohClass(self.base, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CohClass(self.base, {m: c * other for m, c in self.terms.items()})
        if self._check(other) is NotImplemented:
            return NotImplemented
        out: dict = {}
        for s, a in self.terms.items():
            for t, b in other.terms.items():
                if s & t:
                    continue
                out[s | t] = out.get(s | t, 0) + a * b
        return CohClass(self.base, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __repr__(self):
        return f"CohClass({self.base}, {format_class(self)})"

    def to_json(self) -> list:
        from .serialize import rational_to_json

        return [
            {"subset": mask_to_indices(mask), "coeff": rational_to_json(c)}
            for mask, c in sorted(self.terms.items(), key=lambda kv: (bin(kv[0]).count("1"), kv[0]))
        ]

    @classmethod
    def from_json(cls, base: SphereProduct, records) -> "CohClass":
        from .serialize import rational_from_json

        terms: dict = {}
        for rec in records:
            mask = indices_to_mask(rec["subset"])
            terms[mask] = terms.get(mask, 0) + rational_from_json(rec["coeff"])
        return cls(base, terms)


def format_class(a: CohClass) -> str:
    if a.is_zero():
        return "0"
    pieces = []
    for mask, c in sorted(a.terms.items(), key=lambda kv: (bin(kv[0]).count("1"), kv[0])):
        word = "".join(f"ι{i}" for i in mask_to_indices(mask))
        if not word:
            pieces.append(str(c))
        elif c == 1:
            pieces.append(word)
        elif c == -1:
            pieces.append("-" + word)
        else:
            pieces.append(f"{c}·{word}")
    return " + ".join(pieces).replace("+ -", "- ")


def zero(base: SphereProduct) -> CohClass:
    return CohClass(base)


def unit(base: SphereProduct) -> CohClass:
    return CohClass(base, {0: 1})


def generator(base: SphereProduct, i: int) -> CohClass:
    """iota of the ``i``-th factor (1-based)."""
    if not 1 <= i <= base.r:
        raise IndexError(f"factor index {i} out of range 1..{base.r}")
    return CohClass(base, {1 << (i - 1): 1})


def add(a: CohClass, b: CohClass) -> CohClass:
    return a + b


def scale(a: CohClass, q) -> CohClass:
    return a * Fraction(q)


def multiply(a: CohClass, b: CohClass) -> CohClass:
    return a * b


def graded_component(a: CohClass, d: int) -> CohClass:
    """Terms of cohomological degree ``d``."""
    if d % 2:
        return CohClass(a.base)
    return CohClass(a.base, {m: c for m, c in a.terms.items() if a.base.degree(m) == d})


def pair_fundamental(a: CohClass, orientation: int = 1) -> Fraction:
    """Evaluate on the fundamental class; ``orientation=-1`` reverses it."""
    if orientation not in (1, -1):
        raise ValueError("orientation must be +1 or -1")
    return orientation * a.coeff(a.base.top_mask)
