"""Base changes k -> k+1 on hereditary terms.

prime   [k<-k+1]  changes index and b hereditarily
second  <k<-k+1>  changes b only, the index keeps its value
first   {k<-k+1}  changes the index only, b keeps its value
iter              changes k only, index and b keep their values

A component kept "verbatim" keeps its numeric value; its term is re-derived
at base k+1 so the result is again a hereditary normal-form term.
"""
from __future__ import annotations

from .ackermann import DEFAULT_CAP_BITS, BudgetedNat, Exceeded
from .normal_form import MixedOrd, Node, Term, _chain, eval_term, hereditary, mixed_value, mixed

OPS = ("prime", "second", "first", "iter")


def _rebase(t: Term, k: int, part: int, cap: int) -> Term:
    if t is None:
        return None
    v = eval_term(t, k, cap)
    if not v.is_exact:
        raise Exceeded("a verbatim component is over the cap")
    return hereditary(v.value, k + 1, part, cap)


def _rebase_mixed(a: MixedOrd, k: int, cap: int) -> MixedOrd:
    v = mixed_value(a, k, cap)
    if v is None:
        raise Exceeded("a verbatim index coefficient is over the cap")
    return mixed(v, k + 1, cap)


def bc_ord(alpha: MixedOrd, k: int, which: str = "prime") -> MixedOrd:
    """Change base inside a part-2 index: exponents and coefficients recursively."""
    f = bc_prime if which == "prime" else bc_first
    if which not in ("prime", "first"):
        raise ValueError(which)
    return MixedOrd(tuple((bc_ord(e, k, which), f(c, k)) for e, c in alpha.terms))


def bc_prime(t: Term, k: int) -> Term:
    out = None
    for node in reversed(_chain(t)):
        idx = node.index
        idx = bc_ord(idx, k, "prime") if isinstance(idx, MixedOrd) else bc_prime(idx, k)
        out = Node(idx, out, node.l)
    return out


def bc_second(t: Term, k: int, cap: int = DEFAULT_CAP_BITS) -> Term:
    out = None
    for node in reversed(_chain(t)):
        idx = node.index
        idx = _rebase_mixed(idx, k, cap) if isinstance(idx, MixedOrd) else _rebase(idx, k, 1, cap)
        out = Node(idx, out, node.l)
    return out


def bc_first(t: Term, k: int, cap: int = DEFAULT_CAP_BITS) -> Term:
    if t is None:
        return None
    part = 2 if isinstance(t.index, MixedOrd) else 1
    idx = bc_ord(t.index, k, "first") if part == 2 else bc_first(t.index, k, cap)
    return Node(idx, _rebase(t.b, k, part, cap), t.l)


def bc_iter(t: Term, k: int, cap: int = DEFAULT_CAP_BITS) -> Term:
    """Only the base moves; below k this is the identity, as for the other operators."""
    if t is None:
        return None
    if isinstance(t.index, MixedOrd):
        return Node(_rebase_mixed(t.index, k, cap), _rebase(t.b, k, 2, cap), t.l)
    return Node(_rebase(t.index, k, 1, cap), _rebase(t.b, k, 1, cap), t.l)


def base_change(t: Term, k: int, op: str, cap: int = DEFAULT_CAP_BITS) -> Term:
    if op == "prime":
        return bc_prime(t, k)
    if op == "second":
        return bc_second(t, k, cap)
    if op == "first":
        return bc_first(t, k, cap)
    if op == "iter":
        return bc_iter(t, k, cap)
    raise ValueError(f"unknown base change {op!r}")


def bc_value(m: int, k: int, op: str, part: int = 1, cap: int = DEFAULT_CAP_BITS) -> BudgetedNat:
    """Numeric convenience: the value of m after the base change."""
    if k < 3:
        raise ValueError("base changes need k >= 3")
    return eval_term(base_change(hereditary(m, k, part, cap), k, op, cap), k + 1, cap)
