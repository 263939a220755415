"""Ordinals below epsilon_0 in Cantor normal form.

An ``Ord`` is a tuple of ``(exponent, coefficient)`` pairs with strictly
decreasing exponents and positive coefficients; the empty tuple is 0.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple


class ParseError(ValueError):
    """Syntax error in an ordinal expression, with the offending position."""

    def __init__(self, message: str, pos: int, text: str = ""):
        super().__init__(f"{message} at position {pos}" + (f" in {text!r}" if text else ""))
        self.pos = pos


@dataclass(frozen=True)
class Ord:
    terms: tuple[tuple["Ord", int], ...] = ()

    def __post_init__(self) -> None:
        for i, (e, c) in enumerate(self.terms):
            if not isinstance(c, int) or c < 1:
                raise ValueError(f"coefficient must be a positive integer, got {c!r}")
            if i and cmp_e0(self.terms[i - 1][0], e) <= 0:
                raise ValueError("exponents must be strictly decreasing")

    def __lt__(self, other: "Ord") -> bool:
        return cmp_e0(self, other) < 0

    def __le__(self, other: "Ord") -> bool:
        return cmp_e0(self, other) <= 0

    def __gt__(self, other: "Ord") -> bool:
        return cmp_e0(self, other) > 0

    def __ge__(self, other: "Ord") -> bool:
        return cmp_e0(self, other) >= 0

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        return format_e0(self)

    def __repr__(self) -> str:
        return f"Ord({format_e0(self)!r})"


ZERO = Ord()


def _raw(terms) -> Ord:
    # trusted constructor: skips the ordering check
    o = object.__new__(Ord)
    object.__setattr__(o, "terms", tuple(terms))
    return o


def nat(n: int) -> Ord:
    if n < 0:
        raise ValueError("negative natural")
    return _raw(((ZERO, n),)) if n else ZERO


ONE = nat(1)
OMEGA = _raw(((ONE, 1),))


def omega_pow(e: Ord, c: int = 1) -> Ord:
    """omega^e * c."""
    return _raw(((e, c),)) if c else ZERO


def is_finite(a: Ord) -> bool:
    return not a.terms or (len(a.terms) == 1 and not a.terms[0][0].terms)


def finite_value(a: Ord) -> int:
    if not is_finite(a):
        raise ValueError(f"{format_e0(a)} is not finite")
    return a.terms[0][1] if a.terms else 0


def is_successor(a: Ord) -> bool:
    return bool(a.terms) and not a.terms[-1][0].terms


def is_limit(a: Ord) -> bool:
    return bool(a.terms) and bool(a.terms[-1][0].terms)


def cmp_e0(a: Ord, b: Ord) -> int:
    """Return -1, 0 or 1 as a is below, equal to or above b."""
    if a is b:
        return 0
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = cmp_e0(ea, eb)
        if c:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    la, lb = len(a.terms), len(b.terms)
    return (la > lb) - (la < lb)


def add_e0(a: Ord, b: Ord) -> Ord:
    """Ordinal sum a+b; summands of a below the head of b are absorbed."""
    if not b.terms:
        return a
    head, hc = b.terms[0]
    keep = []
    for e, c in a.terms:
        s = cmp_e0(e, head)
        if s > 0:
            keep.append((e, c))
        elif s == 0:
            return _raw(keep + [(e, c + hc)] + list(b.terms[1:]))
        else:
            break
    return _raw(keep + list(b.terms))


def succ(a: Ord) -> Ord:
    return add_e0(a, ONE)


def nsub(m: int, a: Ord) -> Ord:
    """-m+a: finite values are decreased (floored at 0), infinite ones are fixed."""
    if is_finite(a):
        return nat(max(finite_value(a) - m, 0))
    return a


def one_plus(a: Ord) -> Ord:
    return add_e0(ONE, a)


def omega_mul(a: Ord, n: int = 1) -> Ord:
    """omega^n * a, computed exponent-wise as omega^(n+e)."""
    out = []
    for e, c in a.terms:
        e2 = nat(finite_value(e) + n) if is_finite(e) else e
        out.append((e2, c))
    return _raw(out)


def fund_e0(a: Ord, x: int) -> Ord:
    """The x-th member a[x] of the standard fundamental sequence."""
    if not a.terms:
        return ZERO
    *init, (e, c) = a.terms
    prefix = list(init) + ([(e, c - 1)] if c > 1 else [])
    if not e.terms:
        return _raw(prefix)
    if is_successor(e):
        tail = [(fund_e0(e, 0), x)] if x > 0 else []
    else:
        tail = [(fund_e0(e, x), 1)]
    return _raw(prefix + tail)


def pred(a: Ord) -> Ord:
    if not is_successor(a):
        raise ValueError(f"{format_e0(a)} has no predecessor")
    return fund_e0(a, 0)


def mc_e0(a: Ord) -> int:
    """Maximal coefficient occurring hereditarily (mc(0)=0)."""
    best = 0
    for e, c in a.terms:
        best = max(best, c, mc_e0(e))
    return best


def _weight(e: Ord) -> int:
    # omega^1 is written "w" and counts once; otherwise omega^e costs 1+N(e)
    return 1 if e == ONE else 1 + ncount(e)


def ncount(a: Ord) -> int:
    """Hereditary number of omega occurrences in the printed normal form.

    c copies of omega^e count c times and a natural n counts n times.
    """
    return sum(c * _weight(e) for e, c in a.terms)


class Reach(NamedTuple):
    status: str  # "reached" | "not-reached" | "budget"
    steps: int | None = None


def reach(a, b, l: int, step_budget: int, fund, cmp) -> Reach:
    """Follow a -> a[l] -> a[l][l] ... looking for b (generic over the notation)."""
    cur, steps = a, 0
    while True:
        c = cmp(cur, b)
        if c == 0:
            return Reach("reached", steps)
        if c < 0:
            return Reach("not-reached")
        if steps >= step_budget:
            return Reach("budget")
        cur = fund(cur, l)
        steps += 1


def leq_l(a: Ord, b: Ord, l: int, step_budget: int = 10**5) -> Reach:
    """Decide a >=_l b, i.e. whether b lies on the [l]-descent chain from a."""
    return reach(a, b, l, step_budget, fund_e0, cmp_e0)


# -- printing and parsing ---------------------------------------------------

def format_e0(a: Ord) -> str:
    if not a.terms:
        return "0"
    parts = []
    for e, c in a.terms:
        if not e.terms:
            parts.append(str(c))
            continue
        s = "w" if e == ONE else f"w^({format_e0(e)})"
        parts.append(s if c == 1 else f"{s}*{c}")
    return "+".join(parts)


class _Parser:
    def __init__(self, text: str):
        self.s = text
        self.i = 0

    def fail(self, msg: str, pos: int | None = None):
        raise ParseError(msg, self.i if pos is None else pos, self.s)

    def peek(self) -> str:
        return self.s[self.i] if self.i < len(self.s) else ""

    def expect(self, tok: str) -> None:
        if not self.s.startswith(tok, self.i):
            self.fail(f"expected {tok!r}")
        self.i += len(tok)

    def number(self) -> int:
        start = self.i
        while self.peek().isdigit():
            self.i += 1
        digits = self.s[start:self.i]
        if not digits:
            self.fail("expected a natural number")
        if len(digits) > 1 and digits[0] == "0":
            self.fail("leading zero", start)
        return int(digits)

    def expr(self) -> Ord:
        if self.peek() == "0" and not self.s[self.i + 1:self.i + 2].isdigit():
            self.i += 1
            return ZERO
        terms = [self.term()]
        while self.peek() == "+":
            self.i += 1
            pos = self.i
            t = self.term()
            if cmp_e0(terms[-1][0], t[0]) <= 0:
                self.fail("exponents must be strictly decreasing", pos)
            terms.append(t)
        return _raw(terms)

    def term(self) -> tuple[Ord, int]:
        start = self.i
        if self.peek() == "w":
            self.i += 1
            e = ONE
            if self.s.startswith("^(", self.i):
                self.i += 2
                e = self.expr()
                self.expect(")")
                if not e.terms or e == ONE:
                    self.fail("non-canonical exponent", start)
            c = 1
            if self.peek() == "*":
                self.i += 1
                pos = self.i
                c = self.number()
                if c < 2:
                    self.fail("coefficient must be at least 2 when written", pos)
            return (e, c)
        if self.peek().isdigit():
            c = self.number()
            if c == 0:
                self.fail("zero summand", start)
            return (ZERO, c)
        self.fail("expected 'w' or a natural number")


def parse_e0(text: str) -> Ord:
    """Parse the canonical ASCII grammar; non-canonical input is rejected."""
    p = _Parser(text)
    a = p.expr()
    if p.i != len(text):
        p.fail("unexpected trailing input")
    return a


# -- enumeration and sampling -------------------------------------------------

@lru_cache(maxsize=None)
def ordinals_with_count(n: int) -> tuple[Ord, ...]:
    """All ordinals whose ncount is exactly n, in increasing order."""
    if n == 0:
        return (ZERO,)
    # every principal summand omega^e, tagged with its weight
    exps = {e for j in range(n) for e in ordinals_with_count(j)} | {ONE}
    principals = [(e, _weight(e)) for e in exps if _weight(e) <= n]
    principals.sort(key=lambda p: _SortKey(p[0]), reverse=True)
    out: list[Ord] = []

    def build(start: int, left: int, acc: list[tuple[Ord, int]]) -> None:
        if left == 0:
            out.append(_raw(acc))
            return
        for i in range(start, len(principals)):
            e, w = principals[i]
            for c in range(1, left // w + 1):
                build(i + 1, left - c * w, acc + [(e, c)])

    build(0, n, [])
    out.sort(key=_SortKey)
    return tuple(out)


def ordinals_up_to(n: int) -> tuple[Ord, ...]:
    """All ordinals with ncount <= n, in increasing order."""
    return tuple(sorted((a for j in range(n + 1) for a in ordinals_with_count(j)), key=_SortKey))


class _SortKey:
    __slots__ = ("a",)

    def __init__(self, a: Ord):
        self.a = a

    def __lt__(self, other: "_SortKey") -> bool:
        return cmp_e0(self.a, other.a) < 0


def random_ord(rng: random.Random, max_count: int = 7, depth: int = 5) -> Ord:
    """Random ordinal with ncount <= max_count and nesting depth <= depth."""
    budget = rng.randint(0, max_count)
    return _random_with_budget(rng, budget, depth)


def _random_with_budget(rng: random.Random, budget: int, depth: int) -> Ord:
    picks: list[tuple[Ord, int]] = []
    while budget > 0:
        eb = rng.randint(0, budget - 1) if depth > 0 else 0
        e = _random_with_budget(rng, eb, depth - 1)
        w = _weight(e)
        c = rng.randint(1, max(1, budget // w))
        picks.append((e, c))
        budget -= c * w
    # merge equal exponents and sort into normal form
    acc = ZERO
    for e, c in sorted(picks, key=lambda p: _SortKey(p[0]), reverse=True):
        acc = add_e0(acc, omega_pow(e, c))
    return acc


def omega_tower(r: int) -> Ord:
    """omega_r: omega_0 = 1, omega_{r+1} = omega^(omega_r)."""
    a = ONE
    for _ in range(r):
        a = omega_pow(a)
    return a
