"""Two-bridge links, lens spaces, and the other manifolds the constructions land in.

b(p,q) and b(p',q') are isotopic when p' = p and q' = q^(+-1) mod p, or
p' = -p and -q' = q^(+-1) mod p.  Lens spaces follow the same rule (L(p,q)
is the double branched cover of b(p,q)), which is the orientation-preserving
classification; L(p,q) and its mirror L(p,-q) stay distinct.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .exactmath import ContFrac, ExtRational, cf_expand

__all__ = [
    "TwoBridgeLink",
    "LensSpace",
    "ConnectedSumLink",
    "SimpleKnot",
    "INFINITE",
    "tb_canonical",
    "tb_component_count",
    "lens_canonical",
    "lens_equiv",
    "lens_from_two_bridge",
    "lens_chain_description",
    "h1_order",
    "h1_order_sum",
    "simple_knot",
]

INFINITE = math.inf


def _residue_pair(p: int, q: int) -> tuple[int, int]:
    """Sign and residue normalization: p >= 0 and 0 <= q < p (q = 1 when p = 0)."""
    if math.gcd(p, q) != 1:
        raise ValueError(f"({p},{q}) is not a coprime pair")
    if p < 0:
        p, q = -p, -q
    if p == 0:
        return (0, 1)
    return (p, q % p)


@lru_cache(maxsize=65536)
def _invert_choice(p: int, q: int) -> tuple[int, int]:
    if p <= 1:
        return (p, q)
    return (p, min(q, pow(q, -1, p)))


def _canonical_pair(p: int, q: int) -> tuple[int, int]:
    return _invert_choice(*_residue_pair(p, q))


@dataclass(frozen=True)
class TwoBridgeLink:
    """b(p, q), stored in canonical form (p >= 0, smallest of q, 1/q mod p)."""

    p: int
    q: int

    def __post_init__(self) -> None:
        p, q = _canonical_pair(self.p, self.q)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def is_unknot(self) -> bool:
        return self.p == 1

    @property
    def is_unlink(self) -> bool:
        return self.p == 0

    def __str__(self) -> str:
        return f"b({self.p},{self.q})"


@dataclass(frozen=True)
class LensSpace:
    """L(p, q) = -p/q surgery on the unknot, in canonical form.

    L(0,1) is S1xS2 and L(1,0) is S3.
    """

    p: int
    q: int

    def __post_init__(self) -> None:
        p, q = _canonical_pair(self.p, self.q)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def is_s3(self) -> bool:
        return self.p == 1

    @property
    def is_s1xs2(self) -> bool:
        return self.p == 0

    def mirror(self) -> LensSpace:
        return LensSpace(self.p, -self.q)

    def __str__(self) -> str:
        if self.is_s3:
            return "S3"
        if self.is_s1xs2:
            return "S1xS2"
        return f"L({self.p},{self.q})"


def _summand_label(r: int) -> str | None:
    if r == 0:
        return "S1xS2"
    if abs(r) == 1:
        return None
    return f"L({r},1)"


@dataclass(frozen=True)
class ConnectedSumLink:
    """b(r,1) # b(s,1), unordered; stored with r <= s."""

    r: int
    s: int

    def __post_init__(self) -> None:
        if self.r > self.s:
            r, s = self.s, self.r
            object.__setattr__(self, "r", r)
            object.__setattr__(self, "s", s)

    def cover_label(self) -> str:
        """Name of L(r,1) # L(s,1) with S3 summands dropped."""
        parts = [x for x in map(_summand_label, (self.r, self.s)) if x]
        return "#".join(parts) if parts else "S3"

    def __str__(self) -> str:
        return f"b({self.r},1)#b({self.s},1)"


def tb_canonical(p: int, q: int) -> TwoBridgeLink:
    return TwoBridgeLink(p, q)


def tb_component_count(link: TwoBridgeLink) -> int:
    return 2 if link.p % 2 == 0 else 1


def lens_canonical(p: int, q: int) -> LensSpace:
    return LensSpace(p, q)


def lens_equiv(x: LensSpace | tuple[int, int], y: LensSpace | tuple[int, int]) -> bool:
    if not isinstance(x, LensSpace):
        x = LensSpace(*x)
    if not isinstance(y, LensSpace):
        y = LensSpace(*y)
    return x == y


def lens_from_two_bridge(link: TwoBridgeLink) -> LensSpace:
    return LensSpace(link.p, link.q)


def lens_chain_description(lens: LensSpace) -> ContFrac:
    """Chain-link surgery coefficients for L(p,q): digits with value q/p."""
    return cf_expand(ExtRational(lens.q, lens.p))


def h1_order(lens: LensSpace) -> int | float:
    return abs(lens.p) if lens.p else INFINITE


def h1_order_sum(c: ConnectedSumLink) -> int | float:
    return abs(c.r * c.s) if c.r and c.s else INFINITE


@dataclass(frozen=True)
class SimpleKnot:
    """The simple (grid number one) knot K(p, q, k) in L(p, q).

    k is reduced mod |p| when |p| >= 2; the knot is trivial when k = 0 or
    |p| <= 1.
    """

    p: int
    q: int
    k: int

    def __post_init__(self) -> None:
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"({self.p},{self.q}) is not a coprime pair")
        if abs(self.p) >= 2:
            object.__setattr__(self, "k", self.k % abs(self.p))

    @property
    def is_trivial(self) -> bool:
        return self.k == 0 or abs(self.p) <= 1

    @property
    def homology_coefficient(self) -> int:
        """[K(p,q,k)] = k [K(p,q,1)] in H1(L(p,q))."""
        return self.k

    @property
    def is_klein_bottle_knot(self) -> bool:
        """True for K(4m, 2m-1, 2m): the knot with annular complement in the Klein bottle."""
        if self.p == 0 or self.p % 4:
            return False
        m = self.p // 4
        n = abs(self.p)
        return (self.q - (2 * m - 1)) % n == 0 and self.k == (2 * m) % n

    def __str__(self) -> str:
        return f"K({self.p},{self.q},{self.k})"


def simple_knot(p: int, q: int, k: int) -> SimpleKnot:
    return SimpleKnot(p, q, k)
