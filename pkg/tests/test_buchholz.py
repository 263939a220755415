import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from giant_goodstein import buchholz as hb
from giant_goodstein.ordinal_e0 import ParseError, format_e0, parse_e0

from strategies import ot_terms

H = hb.parse_hb
W = hb.BIG_OMEGA


def test_g_set_examples():
    assert hb.g_set(hb.ZERO) == frozenset()
    assert hb.g_set(H("p(W)")) == {hb.ZERO, W}
    assert hb.g_set(W) == {hb.ZERO}


def test_psi_nf_examples():
    assert hb.is_psi_nf(H("p(W)"))
    assert not hb.is_psi_nf(hb.psi(H("p(W)")))
    assert hb.is_psi_nf(hb.psi(hb.ZERO))


def test_cmp_examples():
    assert hb.cmp_hb(hb.psi(hb.ZERO), H("p(W)")) < 0
    assert hb.cmp_hb(H("p(W)"), W) < 0
    assert hb.cmp_hb(H("W^(W)"), H("W^(2)*5")) > 0


def test_cofinality_examples():
    assert hb.cofinality(W) is hb.Cof.UNCOUNTABLE
    assert hb.cofinality(hb.psi(hb.ZERO)) is hb.Cof.SUCCESSOR
    assert hb.cofinality(H("p(W)")) is hb.Cof.OMEGA
    assert hb.cofinality(hb.ZERO) is hb.Cof.ZERO


def test_fund_examples():
    assert hb.fund_hb(hb.psi(hb.ONE), 3) == hb.nat(3)
    # W_{0,0}=0, W_{1,0}=p(0)=1, W_{2,0}=p(1)=w
    assert hb.fund_hb(H("p(W)"), 2) == hb.psi(hb.psi(hb.ONE))
    assert hb.format_hb(hb.fund_hb(H("P(W+1)"), 3)) == "P(W)+w*3"
    assert hb.format_hb(hb.fund_hb(H("W^(W)"), 2)) == "W^(2)"


def test_arith_examples():
    assert hb.hb_add(hb.OMEGA, H("W^(W)")) == H("W^(W)")
    assert hb.hb_nsub(2, W) == W
    assert hb.hb_nsub(2, hb.nat(5)) == hb.nat(3)


def test_eval_examples():
    ev = hb.hb_eval_countable
    assert format_e0(ev(hb.psi(hb.ZERO))) == "1"
    assert format_e0(ev(hb.OMEGA)) == "w"
    assert format_e0(ev(hb.psi(hb.OMEGA))) == "w^(w)"
    assert format_e0(ev(H("p(w+3)"))) == "w^(w+3)"
    with pytest.raises(hb.NotCountable):
        ev(H("p(W)"))


@pytest.mark.parametrize("text", ["p(W)", "W^(W)", "P(W)+w*2+1", "0", "w^(2)*3", "p(W^(W))"])
def test_roundtrip_examples(text):
    assert hb.format_hb(H(text)) == text


@pytest.mark.parametrize("bad", ["p(1)", "W^(1)", "W*1", "w+W", "P(0)", "p(W", ""])
def test_parse_rejects(bad):
    with pytest.raises(ParseError):
        H(bad)


def test_mixed_systems_rejected():
    with pytest.raises(hb.MixedSystems):
        hb.cmp_hb(H("p(W)"), H("P(W)"))


def test_from_e0_agrees_with_eval():
    for text in ["w", "w^(w)+3", "w^(w^(2))*2+w"]:
        a = parse_e0(text)
        assert hb.hb_eval_countable(hb.from_e0(a)) == a


@settings(max_examples=200, deadline=None)
@given(ot_terms)
def test_format_parse_roundtrip(t):
    assert hb.parse_hb(hb.format_hb(t)) == t


@settings(max_examples=200, deadline=None)
@given(ot_terms, st.integers(0, 6))
def test_fund_stays_below_and_in_nf(t, x):
    c = hb.cofinality(t)
    if c in (hb.Cof.ZERO, hb.Cof.UNCOUNTABLE):
        return
    y = hb.fund_hb(t, x)
    assert hb.cmp_hb(y, t) < 0
    assert hb.is_nf(y)


@settings(max_examples=200, deadline=None)
@given(ot_terms, ot_terms)
def test_cmp_antisymmetric(s, t):
    assert hb.cmp_hb(s, t) == -hb.cmp_hb(t, s)
    assert (hb.cmp_hb(s, t) == 0) == (s == t)
