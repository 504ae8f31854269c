import math
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bandcalc.banding import band_connected_sum
from bandcalc.exactmath import ExtRational, Slope, bezout_complement, cf_eval, cf_expand
from bandcalc.family import (
    ChainSurgeryDescription,
    KnotSpec,
    catalog_entry,
    enumerate_catalog,
    identify_family,
    knot_ambient,
    knot_chain_description,
    knot_target_lens,
    odd_sequences,
)
from bandcalc.spaces import LensSpace, TwoBridgeLink, h1_order, lens_from_two_bridge


def coprime_slopes(bound):
    for p in range(0, bound + 1):
        for q in range(-bound, bound + 1):
            if math.gcd(p, q) == 1 and (p or q == 1):
                yield Slope(p, q)


@st.composite
def slopes(draw, bound=12):
    p = draw(st.integers(0, bound))
    q = draw(st.integers(-bound, bound))
    if math.gcd(p, q) != 1:
        p, q = 0, 1
    return Slope(p, q)


def test_target_examples():
    zero = knot_target_lens(KnotSpec(0, 0, Slope(2, 3)))
    assert zero.is_s1xs2 and h1_order(zero) == math.inf
    assert knot_target_lens(KnotSpec(5, 7, Slope(2, 3))) == LensSpace(283, 183)
    berge = knot_target_lens(KnotSpec(1, 1, Slope(2, 3)))
    assert berge == LensSpace(19, 11)
    assert h1_order(berge) == 19 == 2**2 + 2 * 3 + 3**2


@given(st.integers(-8, 8), st.integers(-8, 8), slopes())
def test_paper_sign_uses_minus_form(r, s, sl):
    p, q = sl.p, sl.q
    pp, qq = bezout_complement(sl)
    minus = LensSpace(s * p * p - r * s * p * q + r * q * q, s * p * pp - r * s * p * qq + r * q * qq - 1)
    assert knot_target_lens(KnotSpec(r, s, sl), paper_sign=True) == minus


def test_ambient_examples():
    assert knot_ambient(KnotSpec(0, 1, Slope(2, 3))) == "S1xS2"
    assert knot_ambient(KnotSpec(5, 7, Slope(2, 3))) == "L(5,1)#L(7,1)"
    assert knot_ambient(KnotSpec(-3, -2, Slope(4, 5))) == "L(-3,1)#L(-2,1)"
    assert knot_ambient(KnotSpec(0, 0, Slope(4, 5))) == "S1xS2#S1xS2"


def test_chain_examples():
    r, s = 5, 7
    c = knot_chain_description(KnotSpec(r, s, Slope(2, 3)))
    assert c == ChainSurgeryDescription(8, (2, 2, 0 + r, s, 0, -2, -2), 8)
    c = knot_chain_description(KnotSpec(r, s, Slope(0, 1)))
    assert c == ChainSurgeryDescription(4, (0 + r, s, 0), 4)
    c = knot_chain_description(KnotSpec(r, s, Slope(1, 1)))
    assert c == ChainSurgeryDescription(4, (-1 + r, s, 1), 4)


def test_chain_validation():
    with pytest.raises(ValueError):
        ChainSurgeryDescription(6, (1, 2), 6)
    with pytest.raises(ValueError):
        ChainSurgeryDescription(5, (1, 2, 3, 4), 5)
    with pytest.raises(ValueError):
        ChainSurgeryDescription(4, (1, 2, 3), 9)


@given(st.integers(-9, 9), st.integers(-9, 9), slopes(20))
def test_chain_template(r, s, sl):
    c = knot_chain_description(KnotSpec(r, s, sl))
    k = (c.chain_length - 2) // 2
    assert k % 2 == 1 and len(c.coefficients) == 2 * k + 1
    assert c.unfilled_index == c.chain_length
    b = tuple(-x for x in c.coefficients[k + 1:])  # b_k, ..., b_1
    assert cf_eval(b) == sl.value
    assert c.coefficients[k] == s
    assert c.coefficients[k - 1] == b[0] + r
    assert c.coefficients[:k - 1] == b[:0:-1]


@given(st.integers(-9, 9), st.integers(-9, 9), slopes(20))
def test_banding_sequence_matches_oracle(r, s, sl):
    # the plait closure of gamma^-1 beta gamma is b(t,u) with
    # u/t = [-b_1, ..., -b_k + r, s, b_k, ..., b_1]
    b = cf_expand(sl.value, "odd").digits  # (b_k, ..., b_1)
    seq = tuple(-x for x in b[::-1][:-1]) + (-b[0] + r, s) + b
    v = cf_eval(seq)
    assert TwoBridgeLink(v.denominator, v.numerator) == band_connected_sum(r, s, sl).link


def test_identify_family_examples():
    assert identify_family(KnotSpec(-3, -2, Slope(4, 5))) == {"EM-Wu(5)"}
    assert identify_family(KnotSpec(6, 1, Slope(2, 3))) == {"Kang(6,3)"}
    assert identify_family(KnotSpec(1, 1, Slope(7, 3))) == {"Berge-VII"}
    assert identify_family(KnotSpec(-1, 1, Slope(7, 3))) == {"Berge-VIII"}
    assert identify_family(KnotSpec(0, -1, Slope(7, 3))) == {"GOFK"}
    assert identify_family(KnotSpec(4, 9, Slope(7, 3))) == set()
    # slope (p-1, p) with p negative is still (p-1, p) up to sign
    assert identify_family(KnotSpec(-3, -2, Slope(-5, -4))) == {"EM-Wu(-4)"}
    assert identify_family(KnotSpec(-3, -2, Slope(0, 1))) == set()


def test_em_wu_anchor():
    for p in range(2, 101):
        assert cf_eval((-1, -p)) == ExtRational(p, p - 1)
        assert f"EM-Wu({p})" in identify_family(KnotSpec(-3, -2, Slope.from_value(cf_eval((-1, -p)))))


def test_entry_invariants():
    e = catalog_entry(KnotSpec(5, 7, Slope(2, 3)))
    assert e.target == lens_from_two_bridge(band_connected_sum(5, 7, Slope(2, 3)).link)
    assert e.target_order == 283
    d = e.to_dict()
    assert d["target_order"] == 283
    assert d["slope"] == {"p": 2, "q": 3}
    assert catalog_entry(KnotSpec(0, 0, Slope(2, 3))).to_dict()["target_order"] == "infinite"


def test_odd_sequences():
    assert list(odd_sequences(1, 1)) == [(-1,), (0,), (1,)]
    assert sum(1 for _ in odd_sequences(3, 1)) == 3 + 27


def test_enumerate_examples():
    for e in enumerate_catalog(0, 0, 3, 2):
        assert e.target_order == math.inf
    cat = enumerate_catalog(5, 7, 3, 4)
    hit = [e for e in cat if e.spec.slope == Slope(2, 3)]
    assert len(hit) == 1 and hit[0].target == LensSpace(283, 183)
    assert len({e.spec for e in cat}) == len(cat)
    small = enumerate_catalog(5, 7, 1, 1)
    assert {e.spec.slope for e in small} == {Slope(1, 1), Slope(0, 1), Slope(1, -1)}
    with pytest.raises(ValueError):
        enumerate_catalog(5, 7, 0, 1)


def test_enumerate_sorted_and_deterministic():
    a = enumerate_catalog(2, -3, 3, 3)
    b = enumerate_catalog(2, -3, 3, 3)
    assert [e.to_json() for e in a] == [e.to_json() for e in b]
    keys = [e.sort_key() for e in a]
    assert keys == sorted(keys)


@pytest.mark.parametrize("r, s", [(5, 7), (-3, -2), (0, 1), (1, -1), (2, 3)])
def test_transfer_consistency(r, s):
    for e in enumerate_catalog(r, s, 3, 3):
        link = band_connected_sum(r, s, e.spec.slope).link
        assert lens_from_two_bridge(link) == knot_target_lens(e.spec) == e.target


def test_quadratic_form_residues():
    for r in range(-10, 11):
        for s in range(-10, 11):
            if not r or not s:
                continue
            for sl in coprime_slopes(12):
                p, q = sl.p, sl.q
                t = s * p * p + r * s * p * q + r * q * q
                assert abs(band_connected_sum(r, s, sl).raw_pair[0]) == abs(t)
                assert (t - s * p * p) % r == 0
                assert (t - r * q * q) % s == 0


@settings(max_examples=200)
@given(st.integers(-8, 8), st.integers(-8, 8), slopes(15))
def test_swap_symmetry_slope_map(r, s, sl):
    # K^{p,q}_{r,s} and K^{q,p}_{s,r} share ambient and target
    a = catalog_entry(KnotSpec(r, s, sl))
    b = catalog_entry(KnotSpec(s, r, Slope(sl.q, sl.p)))
    assert (a.ambient, a.target) == (b.ambient, b.target)


@pytest.mark.parametrize("r, s", [(5, 7), (-3, -2), (0, 4), (1, 6), (2, -3)])
def test_swap_symmetry_multisets_on_slope_boxes(r, s):
    box = list(coprime_slopes(10)) + [Slope(1, 0)]
    box = [x for x in set(box) if Slope(x.q, x.p) in set(box)]

    def invariants(r, s):
        return Counter((catalog_entry(KnotSpec(r, s, sl)).ambient, knot_target_lens(KnotSpec(r, s, sl))) for sl in box)

    assert invariants(r, s) == invariants(s, r)


def test_swap_symmetry_fails_on_cf_bounded_catalogs():
    # the bounded enumeration is not closed under q/p -> p/q, so catalog
    # multisets for (r,s) and (s,r) need not agree
    a = Counter((e.ambient, e.target) for e in enumerate_catalog(5, 7, 3, 4))
    b = Counter((e.ambient, e.target) for e in enumerate_catalog(7, 5, 3, 4))
    assert a != b
