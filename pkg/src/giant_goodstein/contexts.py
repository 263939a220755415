"""Ordinal contexts with one hole, truncation, and the two context decompositions."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .ordinal_e0 import Ord, _raw, cmp_e0, format_e0, fund_e0, is_successor, omega_pow, pred, succ


class InvalidFiller(ValueError):
    """Substitution would break the Cantor normal form ordering."""


class PreconditionViolated(ValueError):
    pass


@dataclass(frozen=True)
class Context:
    """before + HOLE + after, where the hole is either a summand slot
    (inner is None) or sits inside the exponent of a coefficient-1 summand
    omega^(inner)."""

    before: tuple[tuple[Ord, int], ...] = ()
    inner: "Context | None" = None
    after: tuple[tuple[Ord, int], ...] = ()

    def __str__(self) -> str:
        return format_context(self)


HOLE = Context()


def _append(acc: list[tuple[Ord, int]], e: Ord, c: int) -> None:
    if acc:
        s = cmp_e0(acc[-1][0], e)
        if s == 0:
            acc[-1] = (e, acc[-1][1] + c)
            return
        if s < 0:
            raise InvalidFiller(f"exponent {format_e0(e)} above its predecessor")
    acc.append((e, c))


def subst(c: Context, filler: Ord) -> Ord:
    """Fill the hole; equal neighbouring exponents merge, increasing ones are rejected."""
    if c.inner is None:
        middle = list(filler.terms)
    else:
        middle = [(subst(c.inner, filler), 1)]
    acc: list[tuple[Ord, int]] = []
    for e, k in (*c.before, *middle, *c.after):
        _append(acc, e, k)
    return _raw(acc)


def truncate(c: Context) -> Context:
    """Drop everything to the right of the hole, hereditarily."""
    return Context(c.before, None if c.inner is None else truncate(c.inner), ())


def format_context(c: Context) -> str:
    parts = [format_e0(_raw([t])) for t in c.before]
    if c.inner is None:
        parts.append("[[_]]")
    else:
        parts.append(f"w^({format_context(c.inner)})")
    parts.extend(format_e0(_raw([t])) for t in c.after)
    return "+".join(parts)


# -- decomposition of a < b -------------------------------------------------------

@dataclass(frozen=True)
class SuccessorCase:
    pass


@dataclass(frozen=True)
class BelowFirst:
    pass


@dataclass(frozen=True)
class ContextCase:
    ctx: Context
    gamma: Ord
    r: int


StarResult = SuccessorCase | BelowFirst | ContextCase


def star_decompose(a: Ord, b: Ord) -> StarResult:
    """For a < b: b = a+1, or a < b[1], or a = L[[w^g*r]] and b = L*[[w^(g+1)]]."""
    if cmp_e0(a, b) >= 0:
        raise PreconditionViolated("star_decompose needs a < b")
    if b == succ(a):
        return SuccessorCase()
    if cmp_e0(a, fund_e0(b, 1)) < 0:
        return BelowFirst()
    ctx, gamma, r = _context_case(a, b)
    return ContextCase(ctx, gamma, r)


def _context_case(a: Ord, b: Ord) -> tuple[Context, Ord, int]:
    A, B = a.terms, b.terms
    j = 0
    while j < len(A) and j < len(B) and A[j] == B[j]:
        j += 1
    if j >= len(A) or j >= len(B):
        raise AssertionError("no context case: a is an initial segment of b")
    (ea, ca), (eb, cb) = A[j], B[j]
    if ea == eb:
        # same exponent, ca < cb: the first differing principal summand of a
        # comes from the next term of a
        if j + 1 >= len(A) or cb != ca + 1 or j + 1 != len(B):
            raise AssertionError("no context case: a < b[1] should have held")
        prefix = A[:j + 1]
        ai, s = A[j + 1]
        xi = A[j + 2:]
    else:
        if cb != 1 or j + 1 != len(B):
            raise AssertionError("no context case: a < b[1] should have held")
        prefix = A[:j]
        ai, s = ea, ca
        xi = A[j + 1:]
    if is_successor(eb):
        if pred(eb) != ai:
            raise AssertionError("no context case: exponent gap larger than one")
        return Context(prefix, None, xi), ai, s
    sub = star_decompose(ai, eb)
    if not isinstance(sub, ContextCase):
        raise AssertionError("no context case in the exponent")
    after = (((ai, s - 1),) if s > 1 else ()) + xi
    return Context(prefix, sub.ctx, after), sub.gamma, sub.r


# -- contexts lambda_k(alpha) ----------------------------------------------------------

def _default_classifier(k: int) -> Callable[[int], str]:
    from .normal_form import KType, classify_type

    return lambda m: "limit" if classify_type(m, k) is KType.LIMIT else "successor"


def _succ_tail(a: Ord, classify) -> bool:
    # a = beta + q with beta a limit or 0 and q of successor type
    return bool(a.terms) and not a.terms[-1][0].terms and classify(a.terms[-1][1]) == "successor"


def lambda_context(a: Ord, k: int, classify: Callable[[int], str] | None = None
                   ) -> tuple[Context, Ord, int]:
    """Context L, exponent g and coefficient p with a = L[[w^g*p]] and p of limit type
    (or g of the successor shape)."""
    if classify is None:
        classify = _default_classifier(k)
    if not a.terms or _succ_tail(a, classify):
        raise PreconditionViolated(f"{format_e0(a)} is 0 or ends in a successor-type number")
    *init, (en, mn) = a.terms
    init = tuple(init)
    if classify(mn) == "limit":
        return Context(init, None, ()), en, mn
    if _succ_tail(en, classify):
        return Context(init, None, ()), en, mn
    ctx, gamma, p = lambda_context(en, k, classify)
    before = init + (((en, mn - 1),) if mn > 1 else ())
    return Context(before, ctx, ()), gamma, p


def filler(gamma: Ord, r: int) -> Ord:
    return omega_pow(gamma, r)

