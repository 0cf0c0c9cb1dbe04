"""Bookkeeping for matrix Grassmannians Gr_{k,l} and their Thom spaces.

Every bound is a strict inequality; boundary cases return False. The
homotopy comparison with BSU is only known up to roughly 2 min(k, l), and
this module uses the strict form ``d < 2 min(k, l)`` throughout.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import gcd
from typing import Optional

from .bordism_ring import rank as bordism_rank


@dataclass(frozen=True)
class GrassmannPair:
    k: int
    l: int

    def __post_init__(self):
        if self.k < 1 or self.l < 1:
            raise ValueError("k and l must be positive")
        if gcd(self.k, self.l) != 1:
            raise ValueError(f"gcd({self.k}, {self.l}) = {gcd(self.k, self.l)} != 1")

    @property
    def thom_rank(self) -> int:
        """Real rank 2kl of the bundle whose Thom space carries the bordism groups."""
        return 2 * self.k * self.l


def stable_range(p: GrassmannPair) -> int:
    return 2 * min(p.k, p.l)


def in_stable_range(p: GrassmannPair, d: int) -> bool:
    return d < stable_range(p)


def dim_gr(p: GrassmannPair) -> int:
    """Real dimension of SU(kl) / (SU(k) ⊗ SU(l))."""
    k2, l2 = p.k * p.k, p.l * p.l
    return k2 * l2 - k2 - l2 + 1


def valid_stabilization(p: GrassmannPair, m: int, n: int) -> bool:
    """Whether Gr_{k,l} -> Gr_{km,ln} is a valid stabilization, i.e. gcd(km, ln) = 1."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    return gcd(p.k * m, p.l * n) == 1


@dataclass(frozen=True)
class ThomFacts:
    sphere_dim: int
    hurewicz_ok: bool
    in_stable_range: bool
    rank: Optional[int]

    def to_json(self) -> dict:
        return asdict(self)


def thom_facts(p: GrassmannPair, d: int) -> ThomFacts:
    """Dimension facts for pi_{d+2kl} of the Thom space over Gr_{k,l}.

    ``rank`` is the rank of the stabilized group, p'(d/2) for even d, and is
    given whenever the Hurewicz map is a rational isomorphism. Whether this
    particular (k, l) already realizes it is ``in_stable_range``.
    """
    if d < 0:
        raise ValueError("d must be nonnegative")
    hurewicz = d < p.thom_rank - 1
    stable = in_stable_range(p, d)
    return ThomFacts(
        sphere_dim=d + p.thom_rank,
        hurewicz_ok=hurewicz,
        in_stable_range=stable,
        rank=bordism_rank(d) if hurewicz else None,
    )
