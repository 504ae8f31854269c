"""Exact arithmetic: extended rationals, PSL(2,Z), slopes and negative continued fractions.

A negative continued fraction is written

    [a1, ..., an] = -1/(a1 - 1/(a2 - ... - 1/an))

and its matrix is A = S T^a1 S T^a2 S ... T^an S, where
S = [[0,-1],[1,0]] and T = [[1,1],[0,1]].  If A = [[a,b],[c,d]] then
a/c = [a1, ..., an].

Everything here works with Python integers; there is no floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "ExtRational",
    "Psl2Mat",
    "Slope",
    "ContFrac",
    "INF",
    "bezout_complement",
    "cf_eval",
    "cf_matrix",
    "cf_expand",
    "km_relations",
    "KMRelations",
]


@dataclass(frozen=True, order=False)
class ExtRational:
    """A point of Q u {oo}, stored as a reduced fraction.

    ``ExtRational(1, 0)`` is infinity; any ``(x, 0)`` with ``x != 0`` is
    normalized to it.  ``(0, 0)`` is rejected.
    """

    numerator: int
    denominator: int

    def __post_init__(self) -> None:
        n, d = self.numerator, self.denominator
        if n == 0 and d == 0:
            raise ValueError("0/0 is not an extended rational")
        if d == 0:
            n = 1
        else:
            g = math.gcd(n, d)
            n, d = n // g, d // g
            if d < 0:
                n, d = -n, -d
        object.__setattr__(self, "numerator", n)
        object.__setattr__(self, "denominator", d)

    @classmethod
    def from_fraction(cls, x: Fraction | int) -> ExtRational:
        x = Fraction(x)
        return cls(x.numerator, x.denominator)

    @classmethod
    def parse(cls, text: str) -> ExtRational:
        """Parse ``"q/p"`` or ``"n"``; ``"1/0"`` is infinity."""
        num, sep, den = text.strip().partition("/")
        try:
            return cls(int(num), int(den) if sep else 1)
        except ValueError as exc:
            raise ValueError(f"malformed extended rational: {text!r}") from exc

    @property
    def is_infinite(self) -> bool:
        return self.denominator == 0

    def as_fraction(self) -> Fraction:
        if self.is_infinite:
            raise ZeroDivisionError("infinity has no finite value")
        return Fraction(self.numerator, self.denominator)

    def reciprocal(self) -> ExtRational:
        return ExtRational(self.denominator, self.numerator)

    def __neg__(self) -> ExtRational:
        return ExtRational(-self.numerator, self.denominator)

    def __str__(self) -> str:
        if self.denominator == 1:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"


INF = ExtRational(1, 0)


class Psl2Mat:
    """An element of PSL(2,Z).

    Stored as the representative of {M, -M} whose first nonzero entry in the
    scan order (a, c, b, d) is positive.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: int, b: int, c: int, d: int):
        if a * d - b * c != 1:
            raise ValueError(f"determinant of [[{a},{b}],[{c},{d}]] is not 1")
        lead = a or c or b
        if lead < 0:
            a, b, c, d = -a, -b, -c, -d
        self.a, self.b, self.c, self.d = a, b, c, d

    @classmethod
    def identity(cls) -> Psl2Mat:
        return cls(1, 0, 0, 1)

    @classmethod
    def S(cls) -> Psl2Mat:
        return cls(0, -1, 1, 0)

    @classmethod
    def T(cls, n: int = 1) -> Psl2Mat:
        return cls(1, n, 0, 1)

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def __mul__(self, other: Psl2Mat) -> Psl2Mat:
        if not isinstance(other, Psl2Mat):
            return NotImplemented
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = other.a, other.b, other.c, other.d
        return Psl2Mat(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def inverse(self) -> Psl2Mat:
        return Psl2Mat(self.d, -self.b, -self.c, self.a)

    def __pow__(self, n: int) -> Psl2Mat:
        base = self if n >= 0 else self.inverse()
        result = Psl2Mat.identity()
        n = abs(n)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Psl2Mat):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"Psl2Mat([[{self.a}, {self.b}], [{self.c}, {self.d}]])"


@dataclass(frozen=True)
class Slope:
    """A coprime pair (p, q) up to overall sign, read as the value q/p.

    Canonical: p > 0, or (p, q) = (0, 1).
    """

    p: int
    q: int

    def __post_init__(self) -> None:
        p, q = self.p, self.q
        if math.gcd(p, q) != 1:
            raise ValueError(f"slope ({p},{q}) is not a coprime pair")
        if p < 0 or (p == 0 and q < 0):
            object.__setattr__(self, "p", -p)
            object.__setattr__(self, "q", -q)

    @classmethod
    def from_value(cls, v: ExtRational) -> Slope:
        return cls(v.denominator, v.numerator)

    @classmethod
    def parse(cls, text: str) -> Slope:
        """Parse the ``q/p`` syntax; ``1/0`` is the slope (0,1)."""
        num, sep, den = text.strip().partition("/")
        try:
            q, p = int(num), int(den) if sep else 1
        except ValueError as exc:
            raise ValueError(f"malformed slope: {text!r}") from exc
        return cls(p, q)

    @property
    def value(self) -> ExtRational:
        return ExtRational(self.q, self.p)

    def __str__(self) -> str:
        return f"{self.q}/{self.p}"


def bezout_complement(s: Slope) -> tuple[int, int]:
    """Return (p', q') with q*p' - p*q' = 1.

    For p != 0, p' is the residue in [0, |p|); for the slope (0,1) the
    answer is (1, 0).
    """
    p, q = s.p, s.q
    if p == 0:
        return (1, 0)
    m = abs(p)
    pp = pow(q, -1, m) if m > 1 else 0
    qq, rem = divmod(q * pp - 1, p)
    assert rem == 0
    return (pp, qq)


@dataclass(frozen=True)
class ContFrac:
    """Digits (a1, ..., an) of a negative continued fraction."""

    digits: tuple[int, ...] = ()

    def __init__(self, digits: Iterable[int] = ()):
        object.__setattr__(self, "digits", tuple(int(x) for x in digits))

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    def __str__(self) -> str:
        return "[" + ", ".join(map(str, self.digits)) + "]"

    @property
    def value(self) -> ExtRational:
        return cf_eval(self)

    @property
    def matrix(self) -> Psl2Mat:
        return cf_matrix(self)


def _digits(f: ContFrac | Sequence[int]) -> tuple[int, ...]:
    return f.digits if isinstance(f, ContFrac) else tuple(f)


def cf_eval(f: ContFrac | Sequence[int]) -> ExtRational:
    """Evaluate [a1, ..., an] from the innermost digit outward.

    Each stage is kept as a projective pair (num, den) so that 1/0 = oo and
    1/oo = 0 need no special cases.  The empty sequence is 0.
    """
    digits = _digits(f)
    if not digits:
        return ExtRational(0, 1)
    num, den = digits[-1], 1
    for a in reversed(digits[:-1]):
        # a - 1/(num/den) = (a*num - den)/num
        num, den = a * num - den, num
    return ExtRational(-den, num)


def cf_matrix(f: ContFrac | Sequence[int]) -> Psl2Mat:
    """The product S T^a1 S T^a2 S ... T^an S (just S for no digits)."""
    S = Psl2Mat.S()
    m = S
    for a in _digits(f):
        m = m * Psl2Mat.T(a) * S
    return m


def cf_expand(v: ExtRational, parity: str = "any") -> ContFrac:
    """Expand v as a negative continued fraction.

    Runs the ceiling recursion on g = -1/v: a = ceil(g), g <- 1/(a - g),
    stopping once g is an integer.  ``parity`` ("any", "odd", "even") forces
    the length; a mismatch is fixed by rewriting the last digit a as
    (a + 1, 1).  Zero expands to () and, if odd length is asked for, to
    (0, 1, 1), which is (0, 0) after the same rewrite.
    """
    if parity not in ("any", "odd", "even"):
        raise ValueError(f"unknown parity {parity!r}")
    digits: list[int] = []
    if not v.is_infinite and v.numerator == 0:
        pass
    else:
        g = Fraction(0) if v.is_infinite else -1 / v.as_fraction()
        while True:
            a = math.ceil(g)
            digits.append(a)
            if g == a:
                break
            g = 1 / (a - g)
    want = {"odd": 1, "even": 0}.get(parity)
    if want is not None and len(digits) % 2 != want:
        if not digits:
            digits = [0, 0]
        digits[-1:] = [digits[-1] + 1, 1]
    return ContFrac(digits)


@dataclass(frozen=True)
class KMRelations:
    a_over_c: ExtRational
    b_over_d: ExtRational
    d_over_c: ExtRational
    b_over_a: ExtRational


def km_relations(f: ContFrac | Sequence[int]) -> KMRelations:
    """Read the four quotients a/c, b/d, d/c, b/a off the matrix of f.

    They should equal [a1..an], [a1..a(n-1)], [an..a1] and [an..a2].
    """
    digits = _digits(f)
    if not digits:
        raise ValueError("Kirby-Melvin relations need at least one digit")
    m = cf_matrix(digits)
    return KMRelations(
        ExtRational(m.a, m.c),
        ExtRational(m.b, m.d),
        ExtRational(m.d, m.c),
        ExtRational(m.b, m.a),
    )
