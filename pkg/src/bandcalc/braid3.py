"""The 3-string braid group B3 and its image in PSL(2,Z).

Words are kept in run form: a tuple of (generator, exponent) pairs with
generators in {1, 2}, adjacent generators distinct, exponents nonzero.

The representation sends s1 -> T and s2 -> STS = [[1,0],[-1,1]] and reads
words left to right, so rho(s2^b1 s1^b2 ... s2^bn) is the continued
fraction matrix of (b1, ..., bn).  The kernel of rho is the center of B3,
generated by the full twist (s1 s2 s1)^2 of exponent sum 6, so rho together
with the exponent sum decides equality of words.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable

from .exactmath import ExtRational, Psl2Mat
from .spaces import TwoBridgeLink

__all__ = [
    "BraidWord",
    "BraidSyntaxError",
    "SlopeMismatchError",
    "ConjugatorDecomposition",
    "DELTA",
    "FULL_TWIST",
    "parse_braid",
    "rho",
    "phi",
    "exponent_sum",
    "words_equal",
    "conjugator_decompose",
    "plait_closure",
    "alternating_word",
]

Letter = tuple[int, int]


def _reduce_runs(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    out: list[list[int]] = []
    for gen, exp in letters:
        if gen not in (1, 2):
            raise ValueError(f"B3 has generators s1 and s2, not s{gen}")
        if out and out[-1][0] == gen:
            out[-1][1] += exp
        else:
            out.append([gen, exp])
        if out[-1][1] == 0:
            out.pop()
    return tuple((g, e) for g, e in out)


@dataclass(frozen=True)
class BraidWord:
    letters: tuple[Letter, ...] = ()

    def __init__(self, letters: Iterable[Letter] = ()):
        object.__setattr__(self, "letters", _reduce_runs(letters))

    @classmethod
    def sigma(cls, gen: int, exp: int = 1) -> BraidWord:
        return cls([(gen, exp)])

    def __mul__(self, other: BraidWord) -> BraidWord:
        if not isinstance(other, BraidWord):
            return NotImplemented
        return BraidWord(self.letters + other.letters)

    def __pow__(self, n: int) -> BraidWord:
        base = self if n >= 0 else self.inverse()
        return BraidWord(base.letters * abs(n))

    def inverse(self) -> BraidWord:
        return BraidWord((g, -e) for g, e in reversed(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __str__(self) -> str:
        return " ".join(f"s{g}" if e == 1 else f"s{g}^{e}" for g, e in self.letters)


DELTA = BraidWord([(1, 1), (2, 1), (1, 1)])
FULL_TWIST = DELTA * DELTA


class BraidSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class SlopeMismatchError(ValueError):
    pass


_TOKEN = re.compile(r"s([12])(?:\^([+-]?\d+))?\Z")


def parse_braid(text: str) -> BraidWord:
    """Parse whitespace-separated tokens ``s1``, ``s2``, ``s1^-3`` ...

    The empty string is the identity.  Raises BraidSyntaxError pointing at
    the offending token.
    """
    letters = []
    for m in re.finditer(r"\S+", text):
        tok = _TOKEN.match(m.group())
        if tok is None:
            raise BraidSyntaxError(f"bad braid token {m.group()!r}", m.start())
        exp = int(tok.group(2)) if tok.group(2) is not None else 1
        letters.append((int(tok.group(1)), exp))
    return BraidWord(letters)


def alternating_word(exponents: Iterable[int], first: int = 2) -> BraidWord:
    """s2^e1 s1^e2 s2^e3 ... (or starting from s1 when first=1)."""
    gens = (first, 3 - first)
    return BraidWord((gens[i % 2], e) for i, e in enumerate(exponents))


def _generator_images(convention: str) -> dict[int, Psl2Mat]:
    T = Psl2Mat.T()
    STS = Psl2Mat(1, 0, -1, 1)
    if convention == "standard":
        return {1: T, 2: STS}
    if convention == "intro":
        # alternative normalization with the roles of s1 and s2 exchanged
        return {1: STS, 2: T}
    raise ValueError(f"unknown rho convention {convention!r}")


def rho(w: BraidWord, convention: str = "standard") -> Psl2Mat:
    images = _generator_images(convention)
    return reduce(
        lambda m, letter: m * images[letter[0]] ** letter[1],
        w.letters,
        Psl2Mat.identity(),
    )


def phi(w: BraidWord) -> ExtRational:
    """a/c of rho(w) = [[a,b],[c,d]]."""
    m = rho(w)
    return ExtRational(m.a, m.c)


def exponent_sum(w: BraidWord) -> int:
    return sum(e for _, e in w.letters)


def words_equal(u: BraidWord, v: BraidWord) -> bool:
    return exponent_sum(u) == exponent_sum(v) and rho(u) == rho(v)


@dataclass(frozen=True)
class ConjugatorDecomposition:
    """w' = FULL_TWIST^N * w * s1^n."""

    N: int
    n: int


def conjugator_decompose(w: BraidWord, w2: BraidWord) -> ConjugatorDecomposition:
    """Find (N, n) with w2 = FULL_TWIST^N w s1^n, given phi(w) = phi(w2)."""
    if phi(w) != phi(w2):
        raise SlopeMismatchError(f"phi({w}) = {phi(w)} but phi({w2}) = {phi(w2)}")
    m = rho(w).inverse() * rho(w2)
    # m fixes the column (1, 0), so m = +-T^n
    assert m.a == m.d == 1 and m.c == 0, m
    n = m.b
    N, rem = divmod(exponent_sum(w2) - exponent_sum(w) - n, 6)
    assert rem == 0
    return ConjugatorDecomposition(N, n)


def plait_closure(w: BraidWord) -> TwoBridgeLink:
    """The two-bridge link b(c, a) where rho(w) = [[a,b],[c,d]]."""
    m = rho(w)
    return TwoBridgeLink(m.c, m.a)
