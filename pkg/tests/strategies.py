"""Hypothesis strategies for ordinal terms."""
from __future__ import annotations

from hypothesis import strategies as st

from giant_goodstein import buchholz as hb
from giant_goodstein.ordinal_e0 import ZERO, Ord, add_e0, nat, omega_pow


def _cnf(exps: st.SearchStrategy) -> st.SearchStrategy:
    summand = st.tuples(exps, st.integers(1, 4)).map(lambda ec: omega_pow(*ec))
    # add_e0 absorbs smaller summands, so any list lands in Cantor normal form
    return st.lists(summand, max_size=3).map(lambda xs: _sum(xs))


def _sum(xs) -> Ord:
    out = ZERO
    for x in xs:
        out = add_e0(out, x)
    return out


e0_terms = st.recursive(st.integers(0, 5).map(nat), _cnf, max_leaves=8)


def _hb_sum(xs):
    out = hb.ZERO
    for x in xs:
        out = hb.hb_add(out, x)
    return out


def _hb_nodes(children: st.SearchStrategy) -> st.SearchStrategy:
    big = st.tuples(children, st.integers(1, 3)).map(lambda ec: hb.omega_pow_hb(ec[0], hb.nat(ec[1])))
    small = children.filter(hb.is_countable).map(hb.omega_times)
    collapse = children.map(hb.psi)
    return st.lists(st.one_of(big, small, collapse), min_size=1, max_size=3).map(_hb_sum)


def _safe(t) -> bool:
    try:
        return hb.is_nf(t)
    except hb.MixedSystems:
        return False


# countable-or-not psi terms over Omega-polynomials, restricted to psi normal form
ot_terms = st.recursive(st.sampled_from([hb.ZERO, hb.ONE, hb.nat(2), hb.OMEGA, hb.BIG_OMEGA]),
                        _hb_nodes, max_leaves=6).filter(_safe)
