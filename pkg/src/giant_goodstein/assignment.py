"""Ordinal assignments for k-normal-form terms.

Part 1 maps land in epsilon_0.  Part 2 psi lands in OT, chi in epsilon_0,
xi in OT'.  Each map accepts a hereditary term or a plain number, which is
decomposed first.
"""
from __future__ import annotations

from functools import lru_cache

from . import buchholz as hb
from .ackermann import DEFAULT_CAP_BITS, BudgetedNat, Exceeded
from .buchholz import HB
from .normal_form import (MixedOrd, Term, eval_term, hereditary, mixed_small, mixed_value,
                          small_value)
from .ordinal_e0 import (OMEGA, ZERO, Ord, add_e0, cmp_e0, fund_e0, nat, nsub, omega_mul, omega_pow,
                         one_plus)

MAPS = ("psi", "chi", "xi")


def _as_term(t: "Term | int | BudgetedNat", k: int, part: int, cap: int) -> Term:
    if isinstance(t, BudgetedNat):
        if not t.is_exact:
            raise Exceeded("cannot decompose an over-cap value")
        t = t.value
    if isinstance(t, int):
        if k < 3:
            raise ValueError("assignments need k >= 3")
        return hereditary(t, k, part, cap)
    return t


def _value(t: Term, k: int, cap: int) -> int:
    v = eval_term(t, k, cap)
    if not v.is_exact:
        raise Exceeded("this map needs the numeric value of an over-cap component")
    return v.value


def _check_map(name: str) -> None:
    if name not in MAPS:
        raise ValueError(f"unknown map {name!r}")


# -- part 1 -------------------------------------------------------------------------

def assign_part1(name: str, t: "Term | int | BudgetedNat", k: int,
                 cap: int = DEFAULT_CAP_BITS) -> Ord:
    _check_map(name)
    return _p1(name, _as_term(t, k, 1, cap), k, cap)


@lru_cache(maxsize=100_000)
def _p1(name: str, t: Term, k: int, cap: int) -> Ord:
    if t is None:
        return ZERO
    a = small_value(t.index)
    l = nat(t.l)
    if a == 0:
        return nat(_value(t.b, k, cap) + 1 + t.l)
    if a == 1:
        if name == "xi":
            inner = nat(1 + _value(t.b, k, cap))
        else:
            inner = one_plus(_p1(name, t.b, k, cap))
        return add_e0(omega_mul(inner), l)
    if name == "xi":
        head = omega_mul(nsub(1, _p1("xi", t.index, k, cap)), 2)
        tail = add_e0(omega_mul(nat(_value(t.b, k, cap))), l)
        return add_e0(head, tail)
    x = _p1("psi", t.index, k, cap) if name == "psi" else nat(_value(t.index, k, cap))
    head = omega_pow(add_e0(OMEGA, nsub(2, x)))
    return add_e0(add_e0(head, omega_mul(_p1(name, t.b, k, cap))), l)


# -- part 2 -------------------------------------------------------------------------

def assign_part2(name: str, t: "Term | int | BudgetedNat", k: int,
                 cap: int = DEFAULT_CAP_BITS) -> HB | Ord:
    """psi into OT, chi into epsilon_0, xi into OT'.  psi/Psi normal form is checked."""
    _check_map(name)
    t = _as_term(t, k, 2, cap)
    if name == "chi":
        return _chi2(t, k, cap)
    return _p2(name, t, k, cap)


def _hb_omega_one_plus(x: HB) -> HB:
    return hb.omega_times(hb.hb_add(hb.ONE, x))


@lru_cache(maxsize=100_000)
def _p2(name: str, t: Term, k: int, cap: int) -> HB:
    if t is None:
        return hb.ZERO
    a = mixed_small(t.index)
    l = hb.nat(t.l)
    if a == 0:
        return hb.nat(_value(t.b, k, cap) + 1 + t.l)
    if a == 1:
        if name == "xi":
            head = hb.omega_times(hb.nat(1 + _value(t.b, k, cap)))
        else:
            head = _hb_omega_one_plus(_p2(name, t.b, k, cap))
        return hb.hb_add(head, l)
    if name == "psi":
        arg = hb.hb_add(hb.OMEGA, hb.hb_nsub(2, lift_ord("psi", t.index, k, cap)))
        atom = hb.psi(arg)
        rest = hb.omega_times(_p2("psi", t.b, k, cap))
    else:
        arg = hb.hb_nsub(1, lift_ord("xi", t.index, k, cap))
        atom = hb.upsi(arg)
        rest = hb.omega_times(hb.nat(_value(t.b, k, cap)))
    if not hb.is_psi_nf(atom):
        raise AssertionError(f"{hb.format_hb(atom)} is not in collapsing normal form")
    out = hb.hb_add(hb.hb_add(atom, rest), l)
    if not hb.is_wellformed(out):
        raise AssertionError(f"{hb.format_hb(out)} is not in Cantor normal form")
    return out


def lift_ord(name: str, alpha: MixedOrd, k: int, cap: int = DEFAULT_CAP_BITS) -> HB:
    """Omega-polynomial image: omega^b*m+g goes to Omega^(lift b)*(map m)+lift g."""
    if name not in ("psi", "xi"):
        raise ValueError("only psi and xi have Omega lifts")
    out = hb.ZERO
    for e, c in alpha.terms:
        out = hb.hb_add(out, hb.omega_pow_hb(lift_ord(name, e, k, cap), _p2(name, c, k, cap)))
    return out


@lru_cache(maxsize=100_000)
def _chi2(t: Term, k: int, cap: int) -> Ord:
    if t is None:
        return ZERO
    a = mixed_small(t.index)
    l = nat(t.l)
    if a == 0:
        return nat(_value(t.b, k, cap) + 1 + t.l)
    if a == 1:
        return add_e0(omega_mul(one_plus(_chi2(t.b, k, cap))), l)
    alpha = mixed_value(t.index, k, cap)
    if alpha is None:
        raise Exceeded("chi needs the value of the index")
    head = omega_pow(add_e0(OMEGA, nsub(2, alpha)))
    return add_e0(add_e0(head, omega_mul(_chi2(t.b, k, cap))), l)


# -- the flat assignment -------------------------------------------------------------

def ord_simple(t: "Term | int | BudgetedNat", k: int, part: int = 1,
               cap: int = DEFAULT_CAP_BITS) -> Ord:
    """omega^2*a+omega*b+l (part 1) or omega^alpha+omega*b+l (part 2).

    Below the base (index 0) the value m itself is used, as in the other maps;
    0 maps to 0.
    """
    t = _as_term(t, k, part, cap)
    if t is None:
        return ZERO
    if (mixed_small(t.index) if isinstance(t.index, MixedOrd) else small_value(t.index)) == 0:
        return nat(_value(t.b, k, cap) + 1 + t.l)
    b = omega_mul(nat(_value(t.b, k, cap)))
    if isinstance(t.index, MixedOrd):
        alpha = mixed_value(t.index, k, cap)
        if alpha is None:
            raise Exceeded("ord needs the value of the index")
        head = omega_pow(alpha)
    else:
        head = omega_pow(nat(2), _value(t.index, k, cap))
    return add_e0(add_e0(head, b), nat(t.l))


def assign(name: str, t: "Term | int | BudgetedNat", k: int, part: int = 1,
           cap: int = DEFAULT_CAP_BITS) -> HB | Ord:
    """Dispatch on map name ("psi", "chi", "xi" or "simple") and part."""
    if name == "simple":
        return ord_simple(t, k, part, cap)
    return assign_part1(name, t, k, cap) if part == 1 else assign_part2(name, t, k, cap)


def compare(x: HB | Ord, y: HB | Ord) -> int:
    """Compare two images of the same map."""
    if isinstance(x, Ord) and isinstance(y, Ord):
        return cmp_e0(x, y)
    return hb.cmp_hb(x, y)


def fund(x: HB | Ord, n: int) -> HB | Ord:
    if isinstance(x, Ord):
        return fund_e0(x, n)
    return hb.fund_hb(x, n)


def fmt(x: HB | Ord) -> str:
    return hb.format_hb(x) if isinstance(x, HB) else str(x)

