"""Budgeted evaluation of A_a(k,b) for finite and ordinal indices.

A_0(k,b) = b+1, A_{a+1}(k,0) = A_a^k(0), A_{a+1}(k,b+1) = A_a^k(A_{a+1}(k,b)),
and for a limit index lambda, A_lambda(k,b) = A_{lambda_{k,k,b}}^k(...) with
the iterated indices lambda_{0,k,b} = lambda[b],
lambda_{l+1,k,b} = lambda[A_{lambda_l}(k,b)].
"""
from __future__ import annotations

import sys
import threading
from dataclasses import dataclass

from .ordinal_e0 import (Ord, _raw as _raw_ord, add_e0, finite_value, format_e0, fund_e0, is_finite,
                         is_successor, nat, pred)

DEFAULT_CAP_BITS = 65536
DEEP_STACK_BYTES = 512 * 1024 * 1024
DEEP_RECURSION_LIMIT = 200_000


class Exceeded(ArithmeticError):
    """A concrete value was required but lies above the bit budget."""


class EvaluationTooDeep(RuntimeError):
    """The evaluation needs a recursion deeper than even the large-stack retry allows.

    Seen for k < 3 with infinite indices, where moderately sized values feed
    back into fundamental-sequence arguments.
    """


class _Over(Exception):
    """Internal signal: the value needs more than cap bits."""


@dataclass(frozen=True)
class BudgetedNat:
    """A natural number, or the marker that it exceeds 2**cap_bits."""

    value: int | None
    cap_bits: int = DEFAULT_CAP_BITS

    @classmethod
    def exact(cls, value: int, cap_bits: int = DEFAULT_CAP_BITS) -> "BudgetedNat":
        if value < 0:
            raise ValueError("negative natural")
        if value.bit_length() > cap_bits:
            return cls(None, cap_bits)
        return cls(value, cap_bits)

    @classmethod
    def exceeded(cls, cap_bits: int = DEFAULT_CAP_BITS) -> "BudgetedNat":
        return cls(None, cap_bits)

    @property
    def is_exact(self) -> bool:
        return self.value is not None

    def leq(self, other: "BudgetedNat") -> bool | None:
        """self <= other when decidable, else None (both exceeded)."""
        if self.is_exact and other.is_exact:
            return self.value <= other.value
        if self.is_exact:
            return True
        if other.is_exact:
            return False
        return None

    def __str__(self) -> str:
        return str(self.value) if self.is_exact else "overflow"


Index = int | Ord


@dataclass(frozen=True)
class _ExceededAt:
    cap: int


_memo: dict[tuple, int | _ExceededAt] = {}
_memo_lock = threading.Lock()
_first_over: dict[tuple, int] = {}


def clear_memo() -> None:
    with _memo_lock:
        _memo.clear()
        _first_over.clear()


def _norm_index(alpha: Index) -> Index:
    if isinstance(alpha, Ord) and is_finite(alpha):
        return finite_value(alpha)
    if isinstance(alpha, int) and alpha < 0:
        raise ValueError("negative index")
    return alpha


def _split_finite(alpha: Index) -> tuple[Index, int]:
    """Write alpha as base+n with base 0 or a limit."""
    if isinstance(alpha, int):
        return 0, alpha
    if is_successor(alpha):
        return _raw_ord(alpha.terms[:-1]), alpha.terms[-1][1]
    return alpha, 0


def _join_finite(base: Index, n: int) -> Index:
    if base == 0:
        return n
    return add_e0(base, nat(n))


class _Evaluator:
    def __init__(self, cap: int, table: dict | None):
        self.cap = cap
        self.table = table  # None means: use the shared memo

    def _get(self, key):
        if self.table is None:
            return _memo.get(key)
        return self.table.get(key)

    def _put(self, key, val) -> None:
        if self.table is None:
            with _memo_lock:
                old = _memo.get(key)
                if isinstance(val, _ExceededAt) and isinstance(old, _ExceededAt):
                    val = _ExceededAt(max(val.cap, old.cap))
                _memo[key] = val
        else:
            self.table[key] = val

    def check(self, v: int) -> int:
        if v.bit_length() > self.cap:
            raise _Over
        return v

    def ack(self, alpha: Index, k: int, b: int) -> int:
        key = (alpha, k, b)
        hit = self._get(key)
        if isinstance(hit, int):
            return self.check(hit)
        if isinstance(hit, _ExceededAt) and self.cap <= hit.cap:
            raise _Over
        try:
            v = self._compute(alpha, k, b)
        except _Over:
            self._put(key, _ExceededAt(self.cap))
            raise
        self._put(key, v)
        return v

    def _compute(self, alpha: Index, k: int, b: int) -> int:
        self.check(b)
        if alpha == 0:
            return self.check(b + 1)
        if alpha == 1:
            return self.check(k * (1 + b))
        if alpha == 2:
            n = k * (b + 1)
            if k == 1:
                return n
            # A_2 >= k^n, so this lower bound on the bit length is safe
            if n * (k.bit_length() - 1) >= self.cap:
                raise _Over
            return self.check(k * (k**n - 1) // (k - 1))
        if k == 1:
            return self.check(b + 1)
        base, n = _split_finite(alpha)
        if n >= self.first_over(base, k):
            raise _Over
        if isinstance(alpha, Ord) and b == 0:
            self.warm(alpha, k)
        # build A_alpha(k,0), A_alpha(k,1), ... iteratively so b is not a recursion depth
        x = None
        for j in range(b + 1):
            hit = self._get((alpha, k, j))
            if isinstance(hit, int):
                x = self.check(hit)
                continue
            if isinstance(hit, _ExceededAt) and self.cap <= hit.cap:
                raise _Over
            x = self._one(alpha, k, j, x)
            if j < b:
                self._put((alpha, k, j), x)
        return x

    def _one(self, alpha: Index, k: int, j: int, prev: int | None) -> int:
        # A_alpha(k,j) given prev = A_alpha(k,j-1)
        start = 0 if j == 0 else prev
        if isinstance(alpha, int):
            idx = alpha - 1
        elif is_successor(alpha):
            idx = _norm_index(pred(alpha))
        else:
            idx = _norm_index(self.limit_index(alpha, k, k, j))
        x = start
        for _ in range(k):
            x = self.ack(idx, k, x)
        return x

    def first_over(self, base: Index, k: int) -> int:
        """Least n with A_{base+n}(k,0) over the cap.

        A_{base+n}(k,b) >= A_{base+n}(k,0) and the latter grows with n, so
        every index from there on is over the cap as well; this keeps long
        successor chains from turning into deep recursion.
        """
        key = (base, k, self.cap)
        if key not in _first_over:
            n = 3 if base == 0 else 1
            while True:
                _first_over[key] = n + 1  # provisional bound while probing n
                try:
                    self.ack(_join_finite(base, n), k, 0)
                except _Over:
                    break
                except BaseException:
                    del _first_over[key]  # an interrupted probe must not leave its bound
                    raise
                n += 1
            _first_over[key] = n
        return _first_over[key]

    def warm(self, alpha: Ord, k: int) -> None:
        """Evaluate A_c(k,0) bottom-up along the chain of first dependencies.

        A_alpha(k,0) first needs A_{alpha-1}(k,0) or A_{alpha[0]}(k,0); the chain
        can be very long (omega*n -> omega*(n-1) -> ...), so walk it iteratively.
        Each value bounds the next from below, so the first overflow settles the
        rest of the chain.
        """
        chain = []
        c = alpha
        while isinstance(c, Ord):
            c = _norm_index(pred(c) if is_successor(c) else fund_e0(c, 0))
            if isinstance(c, Ord):
                if isinstance(self._get((c, k, 0)), int):
                    break
                chain.append(c)
        over = False
        for c in reversed(chain):
            if over:
                self._put((c, k, 0), _ExceededAt(self.cap))
                continue
            try:
                self.ack(c, k, 0)
            except _Over:
                over = True
        if over:
            raise _Over

    def limit_index(self, lam: Ord, l: int, k: int, b: int) -> Ord:
        mu = fund_e0(lam, b)
        for _ in range(l):
            mu = fund_e0(lam, self.ack(_norm_index(mu), k, b))
        return mu


_deep_lock = threading.Lock()


def _deep(fn):
    """Run fn, retrying on a large-stack thread if the default recursion limit is hit.

    Nested limit indices such as omega^(omega^(omega*3)*n) recurse about n
    levels deep, and n grows with k.
    """
    try:
        return fn()
    except RecursionError:
        pass
    out: dict = {}

    def target() -> None:
        try:
            out["value"] = fn()
        except BaseException as e:  # handed back to the caller
            out["error"] = e

    with _deep_lock:
        old_limit = sys.getrecursionlimit()
        old_stack = threading.stack_size(DEEP_STACK_BYTES)
        sys.setrecursionlimit(max(old_limit, DEEP_RECURSION_LIMIT))
        try:
            t = threading.Thread(target=target)
            t.start()
            t.join()
        finally:
            threading.stack_size(old_stack)
            sys.setrecursionlimit(old_limit)
    if "error" in out:
        raise out["error"]
    return out["value"]


def _unwrap(b: int | BudgetedNat) -> int | None:
    if isinstance(b, BudgetedNat):
        return b.value
    return b


def ack_ord(alpha: Index, k: int, b: int | BudgetedNat, cap_bits: int = DEFAULT_CAP_BITS,
            memo: bool = True) -> BudgetedNat:
    """A_alpha(k,b) for an ordinal (or natural) index alpha < epsilon_0."""
    if k < 1:
        raise ValueError("k must be at least 1")
    bv = _unwrap(b)
    if bv is None:
        return BudgetedNat.exceeded(cap_bits)
    ev = _Evaluator(cap_bits, None if memo else {})
    try:
        return BudgetedNat(_deep(lambda: ev.ack(_norm_index(alpha), k, bv)), cap_bits)
    except _Over:
        return BudgetedNat.exceeded(cap_bits)
    except RecursionError:
        raise EvaluationTooDeep(f"A_{alpha}({k},{bv}) recursion too deep") from None


def ack_fin(a: int, k: int, b: int | BudgetedNat, cap_bits: int = DEFAULT_CAP_BITS,
            memo: bool = True) -> BudgetedNat:
    if not isinstance(a, int):
        raise TypeError("finite index expected")
    return ack_ord(a, k, b, cap_bits, memo)


def limit_index(lam: Ord, l: int, k: int, b: int | BudgetedNat,
                cap_bits: int = DEFAULT_CAP_BITS) -> Ord | None:
    """lambda_{l,k,b}; None when an intermediate value exceeds the cap."""
    if is_finite(lam) or is_successor(lam):
        raise ValueError(f"{format_e0(lam)} is not a limit")
    bv = _unwrap(b)
    if bv is None:
        return None
    try:
        ev = _Evaluator(cap_bits, None)
        return _deep(lambda: ev.limit_index(lam, l, k, bv))
    except _Over:
        return None
    except RecursionError:
        raise EvaluationTooDeep(f"{lam}_{{{l},{k},{bv}}} recursion too deep") from None


def iterate(alpha: Index, k: int, times: int, start: int = 0,
            cap_bits: int = DEFAULT_CAP_BITS) -> BudgetedNat:
    """A_alpha(k,.)^times(start)."""
    x = BudgetedNat.exact(start, cap_bits)
    for _ in range(times):
        x = ack_ord(alpha, k, x, cap_bits)
    return x
