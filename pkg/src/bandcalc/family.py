"""The knots K^{p,q}_{r,s} in L(r,1) # L(s,1) and their lens space surgeries.

K^{p,q}_{r,s} is the lift of the banding arc of slope (p,q) on
b(r,1) # b(s,1), the closure of s2^r s1^s.  Banding there yields a two-bridge
link b(t,u), so the knot has an integral surgery to L(t,u).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterator

from .banding import band_connected_sum
from .exactmath import Slope, cf_eval, cf_expand
from .spaces import ConnectedSumLink, LensSpace, h1_order, lens_from_two_bridge

__all__ = [
    "KnotSpec",
    "ChainSurgeryDescription",
    "CatalogEntry",
    "knot_target_lens",
    "knot_ambient",
    "knot_chain_description",
    "identify_family",
    "catalog_entry",
    "enumerate_catalog",
    "odd_sequences",
]


@dataclass(frozen=True)
class KnotSpec:
    r: int
    s: int
    slope: Slope

    @property
    def summands(self) -> ConnectedSumLink:
        return ConnectedSumLink(self.r, self.s)


@dataclass(frozen=True)
class ChainSurgeryDescription:
    """Integer surgery on all but one component of the chain link C_{2n}.

    Coefficients sit on consecutive components 1 .. 2n-1; component
    ``unfilled_index`` (1-based) is left open.
    """

    chain_length: int
    coefficients: tuple[int, ...]
    unfilled_index: int

    def __post_init__(self) -> None:
        if self.chain_length < 4 or self.chain_length % 2:
            raise ValueError(f"chain length must be even and >= 4, got {self.chain_length}")
        if len(self.coefficients) != self.chain_length - 1:
            raise ValueError("need exactly one coefficient per filled component")
        if not 1 <= self.unfilled_index <= self.chain_length:
            raise ValueError(f"unfilled index {self.unfilled_index} out of range")


def knot_target_lens(k: KnotSpec, paper_sign: bool = False) -> LensSpace:
    """The lens space reached by the integral surgery on k.

    With ``paper_sign`` the slope is replaced by (p, -q) first, which
    gives the order in the form |sp^2 - rspq + rq^2|.
    """
    sl = Slope(k.slope.p, -k.slope.q) if paper_sign else k.slope
    return lens_from_two_bridge(band_connected_sum(k.r, k.s, sl).link)


def knot_ambient(k: KnotSpec) -> str:
    return k.summands.cover_label()


def knot_chain_description(k: KnotSpec) -> ChainSurgeryDescription:
    # q/p = [b_k, ..., b_1], k odd; coefficients b_1..b_{k-1}, b_k + r, s, -b_k..-b_1
    b = cf_expand(k.slope.value, "odd").digits
    half = list(reversed(b))
    coeffs = half[:-1] + [half[-1] + k.r, k.s] + [-x for x in b]
    n = len(b)
    return ChainSurgeryDescription(2 * (n + 1), tuple(coeffs), 2 * (n + 1))


def identify_family(k: KnotSpec) -> frozenset[str]:
    r, s = k.r, k.s
    p, q = k.slope.p, k.slope.q
    tags = set()
    if (r, s) == (-3, -2):
        # slope (m-1, m) up to sign
        m = q if q == p + 1 else -q if q == p - 1 else None
        if m is not None and m not in (0, 1):
            tags.add(f"EM-Wu({m})")
    if (p, q) == (2, 3):
        tags.add(f"Kang({r},{s + 2})")
    if abs(r) == abs(s) == 1:
        tags.add("Berge-VII" if r == s else "Berge-VIII")
    if {r, s} in ({0, 1}, {0, -1}):
        tags.add("GOFK")
    return frozenset(tags)


@dataclass(frozen=True)
class CatalogEntry:
    spec: KnotSpec
    ambient: str
    target: LensSpace
    target_order: int | float
    chain: ChainSurgeryDescription
    family_tags: frozenset[str] = field(default_factory=frozenset)

    def to_dict(self) -> dict:
        order = self.target_order
        return {
            "r": self.spec.r,
            "s": self.spec.s,
            "slope": {"p": self.spec.slope.p, "q": self.spec.slope.q},
            "ambient": self.ambient,
            "target": {"p": self.target.p, "q": self.target.q},
            "target_order": order if isinstance(order, int) else "infinite",
            "chain": {
                "length": self.chain.chain_length,
                "coefficients": list(self.chain.coefficients),
                "unfilled_index": self.chain.unfilled_index,
            },
            "families": sorted(self.family_tags),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def sort_key(self) -> tuple:
        return (abs(self.target_order), self.spec.slope.p, self.spec.slope.q)


def catalog_entry(k: KnotSpec, paper_sign: bool = False) -> CatalogEntry:
    target = knot_target_lens(k, paper_sign)
    return CatalogEntry(
        spec=k,
        ambient=knot_ambient(k),
        target=target,
        target_order=h1_order(target),
        chain=knot_chain_description(k),
        family_tags=identify_family(k),
    )


def odd_sequences(max_len: int, max_digit: int) -> Iterator[tuple[int, ...]]:
    digits = range(-max_digit, max_digit + 1)
    for n in range(1, max_len + 1, 2):
        yield from itertools.product(digits, repeat=n)


def enumerate_catalog(
    r: int, s: int, cf_max_len: int, cf_max_digit: int, paper_sign: bool = False
) -> list[CatalogEntry]:
    """All knots K^{p,q}_{r,s} whose slope has an odd expansion within the bounds.

    Specs are deduplicated by slope; entries come back sorted by
    (|target order|, p, q).
    """
    if cf_max_len < 1 or cf_max_digit < 1:
        raise ValueError("bounds must be >= 1")
    slopes = {Slope.from_value(cf_eval(seq)) for seq in odd_sequences(cf_max_len, cf_max_digit)}
    entries = [catalog_entry(KnotSpec(r, s, sl), paper_sign) for sl in slopes]
    entries.sort(key=CatalogEntry.sort_key)
    return entries
