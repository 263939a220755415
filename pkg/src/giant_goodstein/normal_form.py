"""k-normal forms m = A_alpha(k,b)+l and hereditary Ackermann terms.

Part 1 terms carry a natural index (itself a term); part 2 terms carry an
ordinal index in Cantor normal form whose exponents are again mixed ordinals
and whose coefficients are terms.  The zero term is ``None``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .ackermann import DEFAULT_CAP_BITS, BudgetedNat, ack_ord
from .ordinal_e0 import (Ord, _raw, format_e0, is_finite, finite_value, ordinals_up_to, succ,
                         _SortKey)

MACHINE_MAX = 2**63 - 1
DEFAULT_NCAP = 8


class CertificationImpossible(ArithmeticError):
    """The bracket conditions could not be certified under the current budgets."""


@dataclass(frozen=True)
class AckNF:
    index: int | Ord
    b: int
    l: int
    k: int
    ncap: int | None = None  # enumeration bound used for ordinal indices

    def __str__(self) -> str:
        return format_nf(self)


@dataclass(frozen=True)
class Node:
    index: "Term | MixedOrd"
    b: "Term"
    l: int


@dataclass(frozen=True)
class MixedOrd:
    """CNF ordinal with mixed exponents and term coefficients (part 2 indices)."""

    terms: tuple[tuple["MixedOrd", "Node"], ...] = ()


Term = Union[Node, None]
MIXED_ZERO = MixedOrd()


class KType(enum.Enum):
    SUCCESSOR = "successor"
    LIMIT = "limit"


def _check_k(k: int) -> None:
    if k < 3:
        raise ValueError("normal forms need k >= 3")


def _as_int(m: int | BudgetedNat) -> int:
    if isinstance(m, BudgetedNat):
        if not m.is_exact:
            raise CertificationImpossible("cannot decompose an over-cap value")
        return m.value
    return m


def _search_b(f, m: int) -> int:
    """Largest b with f(b) <= m, given f(0) <= m and f strictly increasing."""
    lo, step = 0, 1
    hi = lo + step
    while _leq(f(hi), m):
        lo = hi
        step *= 2
        hi = lo + step
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _leq(f(mid), m):
            lo = mid
        else:
            hi = mid
    return lo


def _leq(v: BudgetedNat, m: int) -> bool:
    return v.is_exact and v.value <= m


def _finish(index, b: int, m: int, k: int, cap: int, ncap=None) -> AckNF:
    base = ack_ord(index, k, b, cap)
    if not base.is_exact:
        raise CertificationImpossible(f"A_{index}({k},{b}) over cap")
    l = m - base.value
    if l < 0 or l > MACHINE_MAX:
        raise CertificationImpossible(f"remainder {l} out of machine range")
    return AckNF(index, b, l, k, ncap)


def knf_fin(m: int | BudgetedNat, k: int, cap: int = DEFAULT_CAP_BITS) -> AckNF:
    """k-normal form with a natural index."""
    _check_k(k)
    m = _as_int(m)
    if m < 1:
        raise ValueError("normal forms are defined for m >= 1")
    a = 0
    while _leq(ack_ord(a + 1, k, 0, cap), m):
        a += 1
    if a == 0:
        b = m - 1
    elif a == 1:
        b = m // k - 1
    else:
        b = _search_b(lambda x: ack_ord(a, k, x, cap), m)
    return _finish(a, b, m, k, cap)


@lru_cache(maxsize=64)
def _index_table(k: int, ncap: int, cap: int) -> tuple[tuple[Ord, int], ...]:
    rows = []
    for a in ordinals_up_to(ncap):
        v = ack_ord(a, k, 0, cap)
        if v.is_exact:
            rows.append((a, v.value))
    return tuple(rows)


def knf_ord(m: int | BudgetedNat, k: int, ncap: int = DEFAULT_NCAP,
            cap: int = DEFAULT_CAP_BITS) -> AckNF:
    """k-normal form with an ordinal index, maximal among ordinals with ncount <= ncap."""
    _check_k(k)
    m = _as_int(m)
    if m < 1:
        raise ValueError("normal forms are defined for m >= 1")
    best = None
    for a, v in _index_table(k, ncap, cap):
        if v <= m and (best is None or _SortKey(best) < _SortKey(a)):
            best = a
    if best is None:
        raise CertificationImpossible("no candidate index")
    nxt = ack_ord(succ(best), k, 0, cap)
    if _leq(nxt, m):
        raise CertificationImpossible(f"bracket fails above {format_e0(best)}")
    if is_finite(best) and finite_value(best) <= 1:
        b = m - 1 if not best else m // k - 1
    else:
        b = _search_b(lambda x: ack_ord(best, k, x, cap), m)
    return _finish(best, b, m, k, cap, ncap)


def knf(m: int | BudgetedNat, k: int, part: int = 1, cap: int = DEFAULT_CAP_BITS,
        ncap: int = DEFAULT_NCAP) -> AckNF:
    return knf_fin(m, k, cap) if part == 1 else knf_ord(m, k, ncap, cap)


def classify_type(m: int, k: int, cap: int = DEFAULT_CAP_BITS) -> KType:
    """k-successor type: index 0 or positive remainder; k-limit type otherwise."""
    if m <= 0:
        raise ValueError("classify_type is defined for positive m")
    nf = knf_fin(m, k, cap)
    return KType.SUCCESSOR if nf.index == 0 or nf.l > 0 else KType.LIMIT


# -- hereditary terms ----------------------------------------------------------

@lru_cache(maxsize=200_000)
def hereditary(m: int, k: int, part: int = 1, cap: int = DEFAULT_CAP_BITS,
               ncap: int = DEFAULT_NCAP) -> Term:
    """The hereditary k-normal-form term of m."""
    m = _as_int(m)
    chain = []
    while m > 0:
        nf = knf(m, k, part, cap, ncap)
        chain.append(nf)
        m = nf.b
    t: Term = None
    for nf in reversed(chain):
        if part == 1:
            idx = hereditary(nf.index, k, 1, cap, ncap)
        else:
            idx = mixed(nf.index, k, cap, ncap)
        t = Node(idx, t, nf.l)
    return t


def mixed(a: Ord, k: int, cap: int = DEFAULT_CAP_BITS, ncap: int = DEFAULT_NCAP) -> MixedOrd:
    """Mixed form of an ordinal: exponents recursively, coefficients as part-2 terms."""
    return MixedOrd(tuple((mixed(e, k, cap, ncap), hereditary(c, k, 2, cap, ncap))
                          for e, c in a.terms))


def is_part2(t: Term) -> bool:
    return t is not None and isinstance(t.index, MixedOrd)


def _chain(t: Term) -> list[Node]:
    out = []
    while t is not None:
        out.append(t)
        t = t.b
    return out


def eval_term(t: Term, k: int, cap: int = DEFAULT_CAP_BITS) -> BudgetedNat:
    v = 0
    for node in reversed(_chain(t)):
        idx = eval_index(node.index, k, cap)
        if idx is None:
            return BudgetedNat.exceeded(cap)
        r = ack_ord(idx, k, v, cap)
        if not r.is_exact:
            return r
        r = BudgetedNat.exact(r.value + node.l, cap)
        if not r.is_exact:
            return r
        v = r.value
    return BudgetedNat(v, cap)


def eval_index(idx: "Term | MixedOrd", k: int, cap: int = DEFAULT_CAP_BITS) -> int | Ord | None:
    """Natural or ordinal value of an index; None when a coefficient is over the cap."""
    if isinstance(idx, MixedOrd):
        return mixed_value(idx, k, cap)
    v = eval_term(idx, k, cap)
    return v.value


def mixed_value(a: MixedOrd, k: int, cap: int = DEFAULT_CAP_BITS) -> Ord | None:
    out = []
    for e, c in a.terms:
        ev = mixed_value(e, k, cap)
        cv = eval_term(c, k, cap)
        if ev is None or not cv.is_exact:
            return None
        out.append((ev, cv.value))
    return _raw(out)


def term_nodes(t: "Term | MixedOrd") -> int:
    """Size of a term, counting nodes and mixed-ordinal summands."""
    n = 0
    stack = [t]
    while stack:
        x = stack.pop()
        if x is None:
            continue
        if isinstance(x, MixedOrd):
            n += len(x.terms)
            for e, c in x.terms:
                stack.append(e)
                stack.append(c)
        else:
            n += 1
            stack.append(x.index)
            stack.append(x.b)
    return n


def small_value(t: Term) -> int:
    """0, 1, or 2 standing for 'at least 2', read off the structure alone."""
    if t is None:
        return 0
    if t.b is None and t.l == 0 and _index_is_zero(t.index):
        return 1
    return 2


def _index_is_zero(idx) -> bool:
    return idx is None or (isinstance(idx, MixedOrd) and not idx.terms)


def mixed_small(a: MixedOrd) -> int:
    """0, 1, or 2 standing for 'at least 2' for a mixed ordinal."""
    if not a.terms:
        return 0
    if len(a.terms) == 1 and not a.terms[0][0].terms:
        return small_value(a.terms[0][1])
    return 2


# -- printing --------------------------------------------------------------------

def _brace(s: str) -> str:
    return s if s.isdigit() or s == "w" else "{" + s + "}"


def format_nf(nf: AckNF) -> str:
    idx = format_e0(nf.index) if isinstance(nf.index, Ord) else str(nf.index)
    s = f"A_{_brace(idx)}({nf.k},{nf.b})"
    return s + (f"+{nf.l}" if nf.l else "")


def term_str(t: Term, k: int, cap: int = DEFAULT_CAP_BITS) -> str:
    """Decimal value when evaluable, otherwise the symbolic term."""
    v = eval_term(t, k, cap)
    if v.is_exact:
        return str(v.value)
    s = f"A_{_brace(index_str(t.index, k, cap))}({k},{term_str(t.b, k, cap)})"
    return s + (f"+{t.l}" if t.l else "")


def index_str(idx: "Term | MixedOrd", k: int, cap: int = DEFAULT_CAP_BITS) -> str:
    if not isinstance(idx, MixedOrd):
        return term_str(idx, k, cap)
    if not idx.terms:
        return "0"
    parts = []
    for e, c in idx.terms:
        cs = term_str(c, k, cap)
        if not cs.isdigit():
            cs = f"({cs})"
        if not e.terms:
            parts.append(cs)
            continue
        es = index_str(e, k, cap)
        s = "w" if es == "1" else f"w^({es})"
        parts.append(s if cs == "1" else f"{s}*{cs}")
    return "+".join(parts)
