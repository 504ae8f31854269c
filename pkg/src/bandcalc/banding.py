"""Bandings of closed 3-braids to two-bridge links.

For rho(beta) = [[a,b],[c,d]] and a slope (p,q) with Bezout complement
(p',q'), the level arc on the closure of gamma^-1 beta gamma, where
rho(gamma) = [[q,q'],[p,p']], bands the closure to

    b(-b p^2 - (a-d) p q + c q^2,  b p p' + (a-d) p q' - c q q' + a).

Two routes compute this: ``band_formula`` evaluates the closed form, and
``band_oracle`` conjugates matrices and reads off the plait closure.
``band_slope`` runs both and refuses to answer if they disagree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .braid3 import BraidWord, alternating_word, rho
from .exactmath import Psl2Mat, Slope, bezout_complement, cf_expand
from .spaces import TwoBridgeLink

__all__ = [
    "BandingResult",
    "BandingInconsistency",
    "band_formula",
    "band_oracle",
    "band_slope",
    "band_connected_sum",
    "conjugator_for_slope",
    "connected_sum_braid",
    "minus_sign_formula",
]


class BandingInconsistency(RuntimeError):
    """The closed form and the conjugation oracle disagree."""


@dataclass(frozen=True)
class BandingResult:
    link: TwoBridgeLink
    raw_pair: tuple[int, int]
    oracle_matrix: Psl2Mat


def band_formula(m: Psl2Mat, s: Slope, complement: tuple[int, int] | None = None) -> tuple[int, int]:
    a, b, c, d = m.a, m.b, m.c, m.d
    p, q = s.p, s.q
    pp, qq = complement if complement is not None else bezout_complement(s)
    if q * pp - p * qq != 1:
        raise ValueError(f"({pp},{qq}) is not a Bezout complement of {s}")
    tr = a - d
    return (
        -b * p * p - tr * p * q + c * q * q,
        b * p * pp + tr * p * qq - c * q * qq + a,
    )


def _oracle_from_matrices(m: Psl2Mat, g: Psl2Mat) -> BandingResult:
    conj = g.inverse() * m * g
    raw = (conj.c, conj.a)
    return BandingResult(TwoBridgeLink(*raw), raw, conj)


def band_oracle(w: BraidWord, g: BraidWord) -> BandingResult:
    """Band the closure of w along the arc presented by the conjugator g."""
    return _oracle_from_matrices(rho(w), rho(g))


@lru_cache(maxsize=4096)
def conjugator_for_slope(s: Slope) -> BraidWord:
    """A braid gamma with rho(gamma) = +-[[q,q'],[p,p']], (p',q') canonical.

    Built as s2^b1 s1^b2 ... s2^bk from an odd-length expansion q/p = [b],
    then shifted by a power of s1 to land on the canonical complement.
    """
    digits = cf_expand(s.value, "odd").digits
    gamma = alternating_word(digits)
    g = rho(gamma)
    sign = 1 if (g.a, g.c) == (s.q, s.p) else -1
    assert (sign * g.a, sign * g.c) == (s.q, s.p)
    pp0 = sign * g.d
    qq0 = sign * g.b
    pp, qq = bezout_complement(s)
    k = (pp0 - pp) // s.p if s.p else (qq0 - qq) // s.q
    gamma = gamma * BraidWord.sigma(1, -k)
    assert rho(gamma) == Psl2Mat(s.q, qq, s.p, pp)
    return gamma


def band_slope(w: BraidWord, s: Slope) -> BandingResult:
    m = rho(w)
    result = _oracle_from_matrices(m, rho(conjugator_for_slope(s)))
    t, u = band_formula(m, s)
    if result.raw_pair not in ((t, u), (-t, -u)):
        raise BandingInconsistency(
            f"beta={w} slope={s}: formula gives {(t, u)}, oracle gives {result.raw_pair}"
        )
    return result


def connected_sum_braid(r: int, s: int) -> BraidWord:
    """s2^r s1^s, whose closure is b(r,1) # b(s,1)."""
    return BraidWord([(2, r), (1, s)])


def minus_sign_formula(r: int, s: int, sl: Slope) -> tuple[int, int]:
    """b(s p^2 - r s p q + r q^2, s p p' - r s p q' + r q q' - 1).

    This form agrees with ``band_connected_sum`` at the slope
    (p, -q), not at (p, q).
    """
    p, q = sl.p, sl.q
    pp, qq = bezout_complement(sl)
    return (
        s * p * p - r * s * p * q + r * q * q,
        s * p * pp - r * s * p * qq + r * q * qq - 1,
    )


def band_connected_sum(r: int, s: int, sl: Slope) -> BandingResult:
    result = band_slope(connected_sum_braid(r, s), sl)
    minus = minus_sign_formula(r, s, Slope(sl.p, -sl.q))
    if TwoBridgeLink(*minus) != result.link:
        raise BandingInconsistency(
            f"r={r} s={s} slope={sl}: minus-sign form at (p,-q) gives b{minus}, "
            f"oracle gives {result.link}"
        )
    return result
