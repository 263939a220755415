"""Slow, direct reimplementations used as test oracles.

Nothing here calls into giant_goodstein's arithmetic: Ackermann values come from
plain recursion, normal forms from brute-force scans, Goodstein steps from
evaluating numeric trees, and ordinal order/addition from sympy.
"""
from __future__ import annotations

from sympy.sets.ordinals import OmegaPower, Ordinal, ord0

LIMIT = 10**7


class TooBig(Exception):
    pass


_memo: dict[tuple[int, int, int], int] = {}


def ack(a: int, k: int, b: int) -> int:
    """A_a(k,b) by the defining recursion, b unrolled into a loop; TooBig above LIMIT."""
    if b > LIMIT:
        raise TooBig
    if a == 0:
        return b + 1
    if a == 1:
        # k successor steps per round, b+1 rounds: A_1(k,b) = k*(1+b)
        return k * (1 + b)
    x = 0
    for j in range(b + 1):
        key = (a, k, j)
        if key in _memo:
            x = _memo[key]
            continue
        for _ in range(k):
            x = ack(a - 1, k, x)
        _memo[key] = x
    return x


def nf(m: int, k: int) -> tuple[int, int, int]:
    """(a, b, l) with m = A_a(k,b)+l, a maximal then b maximal, by scanning."""
    assert m >= 1
    a = 0
    while True:
        try:
            if ack(a + 1, k, 0) > m:
                break
        except TooBig:
            break
        a += 1
    b = 0
    while ack(a, k, b + 1) <= m:
        b += 1
    return a, b, m - ack(a, k, b)


# A hereditary tree is None (zero) or (index_tree, b_tree, l).

def tree(m: int, k: int):
    if m == 0:
        return None
    a, b, l = nf(m, k)
    return (tree(a, k), tree(b, k), l)


def value(t, k: int) -> int:
    if t is None:
        return 0
    a, b, l = t
    return ack(value(a, k), k, value(b, k)) + l


def changed(m: int, k: int, variant: str) -> int:
    """Value of m after the base change k -> k+1."""
    if m == 0:
        return 0
    if variant == "prime":
        # the tree is base-free, so evaluating it at k+1 is the hereditary change
        return value(tree(m, k), k + 1)
    a, b, l = nf(m, k)
    na = changed(a, k, "first") if variant == "first" else a
    nb = changed(b, k, "second") if variant == "second" else b
    return ack(na, k + 1, nb) + l


def goodstein(m: int, variant: str = "prime", max_steps: int = 10_000) -> list[int]:
    """m_0, m_1, ... up to (excluding) the first zero."""
    out = []
    k = 3
    while m and len(out) < max_steps:
        out.append(m)
        m = changed(m, k, variant) - 1
        k += 1
    return out


# -- ordinals through sympy ------------------------------------------------------------

def to_sympy(a) -> Ordinal:
    """giant_goodstein Ord -> sympy Ordinal (only reads the .terms tuple)."""
    if not a.terms:
        return ord0
    return Ordinal(*[OmegaPower(_exp(e), c) for e, c in a.terms])


def _exp(e):
    if e.terms and len(e.terms) == 1 and not e.terms[0][0].terms:
        return e.terms[0][1]
    if not e.terms:
        return 0
    return to_sympy(e)


def sympy_cmp(x: Ordinal, y: Ordinal) -> int:
    return int(bool(x > y)) - int(bool(x < y))

