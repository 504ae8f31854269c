"""Property suites behind ``bandcalc verify``.

Each suite returns a VerifyReport; randomized suites draw from
``random.Random(seed)`` so runs are reproducible.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .banding import _oracle_from_matrices, band_formula, conjugator_for_slope
from .braid3 import (
    FULL_TWIST,
    BraidWord,
    conjugator_decompose,
    exponent_sum,
    rho,
    words_equal,
)
from .exactmath import (
    ExtRational,
    Slope,
    bezout_complement,
    cf_eval,
    cf_expand,
    km_relations,
)
from .family import KnotSpec, enumerate_catalog, identify_family
from .spaces import _invert_choice, _residue_pair

__all__ = ["VerifyReport", "SUITES", "run_suite", "random_word", "slope_grid"]

DEFAULT_SEED = 20240229
MAX_FAILURES_KEPT = 20


@dataclass
class VerifyReport:
    suite: str
    cases: int = 0
    failures: list[tuple[str, str, str]] = field(default_factory=list)
    failure_count: int = 0

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def check(self, ok: bool, rendering: Callable[[], tuple[str, str, str]]) -> None:
        self.cases += 1
        if not ok:
            self.failure_count += 1
            if len(self.failures) < MAX_FAILURES_KEPT:
                self.failures.append(rendering())

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "failures": self.failure_count,
            "examples": [list(f) for f in self.failures],
        }


def random_word(rng: random.Random, max_len: int = 12, max_exp: int = 6) -> BraidWord:
    """A run-form word with 1..max_len runs and exponents in [-max_exp, max_exp] minus 0."""
    n = rng.randint(1, max_len)
    gen = rng.choice((1, 2))
    letters = []
    for _ in range(n):
        e = rng.choice([x for x in range(-max_exp, max_exp + 1) if x])
        letters.append((gen, e))
        gen = 3 - gen
    return BraidWord(letters)


def slope_grid(bound: int) -> list[Slope]:
    """Every canonical slope (p, q) with |p|, |q| <= bound."""
    return [
        Slope(p, q)
        for p in range(0, bound + 1)
        for q in range(-bound, bound + 1)
        if math.gcd(p, q) == 1 and (p > 0 or q == 1)
    ]


def random_digits(rng: random.Random, min_len: int, max_len: int, max_digit: int) -> tuple[int, ...]:
    return tuple(rng.randint(-max_digit, max_digit) for _ in range(rng.randint(min_len, max_len)))


def suite_thm11_oracle(bound: int | None, seed: int) -> VerifyReport:
    """Closed form vs. conjugation oracle: 500 words x all slopes |p|,|q| <= 20."""
    rng = random.Random(seed)
    rep = VerifyReport("thm11-oracle")
    slopes = [(s, rho(conjugator_for_slope(s)), bezout_complement(s)) for s in slope_grid(20)]
    for _ in range(500):
        w = random_word(rng, bound or 12)
        m = rho(w)
        for s, g, comp in slopes:
            raw = _oracle_from_matrices(m, g).raw_pair
            t, u = band_formula(m, s, comp)
            rep.check(
                raw == (t, u) or raw == (-t, -u),
                lambda: (f"{w} @ {s}", str((t, u)), str(raw)),
            )
    return rep


def suite_bezout(bound: int | None, seed: int) -> VerifyReport:
    """All complements (p'+kp, q'+kq), |k| <= 5, give one canonical link."""
    rng = random.Random(seed)
    rep = VerifyReport("bezout")
    slopes = [(s, bezout_complement(s)) for s in slope_grid(bound or 20)]
    for _ in range(500):
        w = random_word(rng)
        m = rho(w)
        for s, (pp, qq) in slopes:
            p, q = s.p, s.q
            residues = {
                _residue_pair(*band_formula(m, s, (pp + k * p, qq + k * q)))
                for k in range(-5, 6)
            }
            links = {_invert_choice(*x) for x in residues}
            rep.check(len(links) == 1, lambda: (f"{w} @ {s}", "one link", str(sorted(links))))
    return rep


def suite_km_lemma(bound: int | None, seed: int) -> VerifyReport:
    """The four matrix quotients against independent evaluations, 2000 sequences."""
    rng = random.Random(seed)
    rep = VerifyReport("km-lemma")
    for _ in range(2000):
        a = random_digits(rng, 1, 10, bound or 9)
        km = km_relations(a)
        expected = (cf_eval(a), cf_eval(a[:-1]), cf_eval(a[::-1]), cf_eval(a[:0:-1]))
        got = (km.a_over_c, km.b_over_d, km.d_over_c, km.b_over_a)
        rep.check(got == expected, lambda: (str(a), ", ".join(map(str, expected)), ", ".join(map(str, got))))
    return rep


def suite_concat(bound: int | None, seed: int) -> VerifyReport:
    """[x, a, 0, b, y] = [x, a+b, y] for 1000 random cases."""
    rng = random.Random(seed)
    rep = VerifyReport("concat")
    d = bound or 9
    for _ in range(1000):
        x = random_digits(rng, 0, 5, d)
        y = random_digits(rng, 0, 5, d)
        a, b = rng.randint(-d, d), rng.randint(-d, d)
        lhs, rhs = cf_eval(x + (a, 0, b) + y), cf_eval(x + (a + b,) + y)
        rep.check(lhs == rhs, lambda: (f"{x} {a} 0 {b} {y}", str(rhs), str(lhs)))
    return rep


def suite_cf_roundtrip(bound: int | None, seed: int) -> VerifyReport:
    """Expansion round trips at every parity, and the trailing-digit rewrite."""
    rep = VerifyReport("cf-roundtrip")
    n = bound or 50
    for s in slope_grid(n):
        v = s.value
        for parity in ("any", "odd", "even"):
            f = cf_expand(v, parity)
            ok = cf_eval(f) == v and (parity == "any" or len(f) % 2 == (1 if parity == "odd" else 0))
            rep.check(ok, lambda: (f"{v} {parity}", str(v), f"{f} = {cf_eval(f)}"))
        digits = cf_expand(v).digits
        if digits:
            fixed = digits[:-1] + (digits[-1] + 1, 1)
            rep.check(cf_eval(fixed) == v, lambda: (str(fixed), str(v), str(cf_eval(fixed))))
    return rep


def suite_thm14(bound: int | None, seed: int) -> VerifyReport:
    """[-1,-p] = p/(p-1) for 2 <= p <= bound, [0,2,2] = 3/2, and the family tags they support."""
    rep = VerifyReport("thm14")
    for p in range(2, (bound or 100) + 1):
        got = cf_eval((-1, -p))
        want = ExtRational(p, p - 1)
        rep.check(got == want, lambda: (f"[-1,-{p}]", str(want), str(got)))
        tags = identify_family(KnotSpec(-3, -2, Slope(p - 1, p)))
        rep.check(f"EM-Wu({p})" in tags, lambda: (f"K^({p-1},{p})_(-3,-2)", f"EM-Wu({p})", str(sorted(tags))))
    got = cf_eval((0, 2, 2))
    rep.check(got == ExtRational(3, 2), lambda: ("[0,2,2]", "3/2", str(got)))
    for r in range(-10, 11):
        for q in range(-10, 11):
            tags = identify_family(KnotSpec(r, q - 2, Slope(2, 3)))
            rep.check(f"Kang({r},{q})" in tags, lambda: (f"K^(2,3)_({r},{q-2})", f"Kang({r},{q})", str(sorted(tags))))
    return rep


_RELATION_PAIRS = (
    (((1, 1), (2, 1), (1, 1)), ((2, 1), (1, 1), (2, 1))),
    (((1, -1), (2, -1), (1, -1)), ((2, -1), (1, -1), (2, -1))),
)


def _unit_letters(w: BraidWord) -> list[tuple[int, int]]:
    return [(g, 1 if e > 0 else -1) for g, e in w.letters for _ in range(abs(e))]


def suite_word_problem(bound: int | None, seed: int) -> VerifyReport:
    """Braid-relation rewrites keep (rho, exponent sum); decompositions round-trip."""
    rng = random.Random(seed)
    rep = VerifyReport("word-problem")
    for _ in range(10_000):
        units = _unit_letters(random_word(rng, bound or 12))
        i = rng.randint(0, len(units))
        lhs, rhs = rng.choice(_RELATION_PAIRS)
        if rng.random() < 0.5:
            lhs, rhs = rhs, lhs
        u = BraidWord(units[:i] + list(lhs) + units[i:])
        v = BraidWord(units[:i] + list(rhs) + units[i:])
        same = rho(u) == rho(v) and exponent_sum(u) == exponent_sum(v) and words_equal(u, v)
        rep.check(same, lambda: (f"{u} vs {v}", "equal", "different"))
    for _ in range(500):
        w = random_word(rng, bound or 12)
        N, n = rng.randint(-10, 10), rng.randint(-10, 10)
        w2 = FULL_TWIST**N * w * BraidWord.sigma(1, n)
        dec = conjugator_decompose(w, w2)
        rep.check((dec.N, dec.n) == (N, n), lambda: (f"{w}, N={N}, n={n}", str((N, n)), str((dec.N, dec.n))))
    return rep


def suite_catalog_determinism(bound: int | None, seed: int) -> VerifyReport:
    """Two enumerations of r=5, s=7 serialize to identical bytes."""
    rep = VerifyReport("catalog-determinism")
    digit = bound or 4
    first = "\n".join(e.to_json() for e in enumerate_catalog(5, 7, 3, digit))
    second = "\n".join(e.to_json() for e in enumerate_catalog(5, 7, 3, digit))
    rep.check(first == second, lambda: ("enumerate 5 7 3 %d" % digit, "identical", "differs"))
    rep.check(
        any(f'"slope": {{"p": 2, "q": 3}}' in line and '"target_order": 283' in line for line in first.splitlines()),
        lambda: ("enumerate 5 7 3 %d" % digit, "slope 3/2 entry of order 283", "missing"),
    )
    return rep


SUITES: dict[str, Callable[[int | None, int], VerifyReport]] = {
    "thm11-oracle": suite_thm11_oracle,
    "bezout": suite_bezout,
    "km-lemma": suite_km_lemma,
    "concat": suite_concat,
    "cf-roundtrip": suite_cf_roundtrip,
    "thm14": suite_thm14,
    "word-problem": suite_word_problem,
    "catalog-determinism": suite_catalog_determinism,
}


def run_suite(name: str, bound: int | None = None, seed: int = DEFAULT_SEED) -> Iterator[VerifyReport]:
    names = list(SUITES) if name == "all" else [name]
    for n in names:
        if n not in SUITES:
            raise KeyError(n)
        yield SUITES[n](bound, seed)
