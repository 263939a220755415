"""Buchholz-style notations: psi over Omega (system OT) and Psi over Omega (OT').

A term is a sum of summands in weakly... strictly decreasing order:

* ``OmegaPow(exp, coeff)``  Omega^exp * coeff, exp > 0, coeff countable and > 0
* ``Psi(arg, n)``           (psi arg) * n; psi 0 = 1 and psi 1 = omega, so the
                            naturals and the omega^j live here as well
* ``UPsi(arg, n)``          (Psi arg) * n

Omega-powers come first, then the countable atoms.  Normal-form terms are
compared lexicographically; psi-atoms compare by their arguments.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .ordinal_e0 import Ord, ParseError, ZERO as E0_ZERO, add_e0, omega_mul as e0_omega_mul, omega_pow


class MixedSystems(ValueError):
    """psi-terms above omega and Psi-terms cannot be compared with each other."""


class NotCountable(ValueError):
    pass


@dataclass(frozen=True)
class OmegaPow:
    exp: "HB"
    coeff: "HB"


@dataclass(frozen=True)
class Psi:
    arg: "HB"
    n: int = 1


@dataclass(frozen=True)
class UPsi:
    arg: "HB"
    n: int = 1


Summand = OmegaPow | Psi | UPsi


@dataclass(frozen=True)
class HB:
    terms: tuple[Summand, ...] = ()

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        return format_hb(self)

    def __repr__(self) -> str:
        return f"HB({format_hb(self)!r})"

    def __lt__(self, other: "HB") -> bool:
        return cmp_hb(self, other) < 0

    def __le__(self, other: "HB") -> bool:
        return cmp_hb(self, other) <= 0


ZERO = HB()


def nat(n: int) -> HB:
    return HB((Psi(ZERO, n),)) if n else ZERO


ONE = nat(1)


def psi(a: HB) -> HB:
    return HB((Psi(a, 1),))


def upsi(a: HB) -> HB:
    """Psi(a); Psi(0) is read as 0."""
    return HB((UPsi(a, 1),)) if a else ZERO


def omega_pow_hb(e: HB, c: HB = ONE) -> HB:
    """Omega^e * c, collapsing to c itself when e = 0."""
    if not c:
        return ZERO
    return HB((OmegaPow(e, c),)) if e else c


OMEGA = psi(ONE)
BIG_OMEGA = omega_pow_hb(ONE)


def is_nat(t: HB) -> bool:
    return not t.terms or (len(t.terms) == 1 and isinstance(t.terms[0], Psi) and not t.terms[0].arg)


def nat_value(t: HB) -> int:
    if not is_nat(t):
        raise ValueError(f"{format_hb(t)} is not a natural number")
    return t.terms[0].n if t.terms else 0


def is_countable(t: HB) -> bool:
    return not any(isinstance(s, OmegaPow) for s in t.terms)


def uses_upsi(t: HB) -> bool:
    for s in t.terms:
        if isinstance(s, UPsi):
            return True
        if isinstance(s, OmegaPow) and (uses_upsi(s.exp) or uses_upsi(s.coeff)):
            return True
        if isinstance(s, Psi) and uses_upsi(s.arg):
            return True
    return False


def in_otp(t: HB) -> bool:
    """OT' terms use Psi, Omega, omega and naturals; psi only as omega^0 or omega^1."""
    return all(isinstance(s, UPsi) or (is_nat(s.arg) and nat_value(s.arg) <= 1)
               for s in psi_nodes(t))


def system_of(t: HB) -> str:
    return "OTprime" if uses_upsi(t) else "OT"


# -- comparison ---------------------------------------------------------------------

def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def cmp_atom(x: Summand, y: Summand) -> int:
    """Compare summands ignoring their coefficients."""
    xo, yo = isinstance(x, OmegaPow), isinstance(y, OmegaPow)
    if xo or yo:
        if xo and yo:
            return cmp_hb(x.exp, y.exp)
        return 1 if xo else -1
    if type(x) is type(y):
        return cmp_hb(x.arg, y.arg)
    p, u, s = (x, y, -1) if isinstance(x, Psi) else (y, x, 1)
    if is_nat(p.arg) and nat_value(p.arg) <= 1:
        return s  # naturals and omega*n sit below every Psi term
    del u
    raise MixedSystems("cannot order psi above omega against Psi")


def _cmp_summand(x: Summand, y: Summand) -> int:
    c = cmp_atom(x, y)
    if c:
        return c
    if isinstance(x, OmegaPow):
        return cmp_hb(x.coeff, y.coeff)
    return _sign(x.n - y.n)


def cmp_hb(s: HB, t: HB) -> int:
    """Return -1, 0 or 1; both arguments must be well-formed."""
    if s is t:
        return 0
    for x, y in zip(s.terms, t.terms):
        c = _cmp_summand(x, y)
        if c:
            return c
    return _sign(len(s.terms) - len(t.terms))


def is_wellformed(t: HB) -> bool:
    try:
        check_wellformed(t)
    except (ValueError, MixedSystems):
        return False
    return True


def check_wellformed(t: HB) -> None:
    prev = None
    for s in t.terms:
        if isinstance(s, OmegaPow):
            if not s.exp:
                raise ValueError("Omega^0 must be written as a countable term")
            if not s.coeff or not is_countable(s.coeff):
                raise ValueError("Omega coefficients must be countable and positive")
            check_wellformed(s.exp)
            check_wellformed(s.coeff)
        else:
            if s.n < 1:
                raise ValueError("coefficients must be positive")
            check_wellformed(s.arg)
            if isinstance(s, UPsi) and not s.arg:
                raise ValueError("Psi(0) is not a term")
        if prev is not None and cmp_atom(prev, s) <= 0:
            raise ValueError("summands must be strictly decreasing")
        prev = s


# -- arithmetic -------------------------------------------------------------------------

def _merge(x: Summand, y: Summand) -> Summand:
    if isinstance(x, OmegaPow):
        return OmegaPow(x.exp, hb_add(x.coeff, y.coeff))
    return type(x)(x.arg, x.n + y.n)


def hb_add(s: HB, t: HB) -> HB:
    """s+t with absorption of the summands of s below the head of t."""
    if not t.terms:
        return s
    head = t.terms[0]
    keep = []
    for x in s.terms:
        c = cmp_atom(x, head)
        if c > 0:
            keep.append(x)
        elif c == 0:
            return HB(tuple(keep) + (_merge(x, head),) + t.terms[1:])
        else:
            break
    return HB(tuple(keep) + t.terms)


def hb_nsub(m: int, t: HB) -> HB:
    """-m+t: finite terms decrease (floored at 0), infinite terms are fixed."""
    if is_nat(t):
        return nat(max(nat_value(t) - m, 0))
    return t


def omega_times(t: HB) -> HB:
    """omega*t for OT terms: psi(j) -> psi(j+1) for finite j, larger atoms absorb omega."""
    out = []
    for s in t.terms:
        if isinstance(s, OmegaPow):
            out.append(s)
        elif isinstance(s, Psi):
            out.append(Psi(nat(nat_value(s.arg) + 1), s.n) if is_nat(s.arg) else s)
        else:
            raise MixedSystems("omega*Psi(a) is not supported")
    return HB(tuple(out))


def hb_pred(t: HB) -> HB:
    last = t.terms[-1] if t.terms else None
    if not isinstance(last, Psi) or last.arg:
        raise ValueError(f"{format_hb(t)} is not a successor")
    rest = t.terms[:-1]
    return HB(rest + ((Psi(ZERO, last.n - 1),) if last.n > 1 else ()))


# -- G sets and normal forms ---------------------------------------------------------------

def g_set(t: HB) -> frozenset[HB]:
    out: set[HB] = set()
    for s in t.terms:
        if isinstance(s, OmegaPow):
            out |= g_set(s.exp) | g_set(s.coeff)
        else:
            out |= g_set(s.arg)
            out.add(s.arg)
    return frozenset(out)


def is_psi_nf(t: HB) -> bool:
    """psi(a) (or Psi(a)) is in normal form when every member of G(a) is below a."""
    if len(t.terms) != 1 or isinstance(t.terms[0], OmegaPow):
        raise ValueError("is_psi_nf expects a single psi or Psi atom")
    a = t.terms[0].arg
    return all(cmp_hb(g, a) < 0 for g in g_set(a))


def is_nf(t: HB) -> bool:
    """Well-formed, and every psi/Psi node below is in normal form."""
    if not is_wellformed(t):
        return False
    return all(is_psi_nf(HB((type(s)(s.arg, 1),))) for s in psi_nodes(t))


def psi_nodes(t: HB) -> list[Psi | UPsi]:
    out = []
    stack = [t]
    while stack:
        for s in stack.pop().terms:
            if isinstance(s, OmegaPow):
                stack += [s.exp, s.coeff]
            else:
                out.append(s)
                stack.append(s.arg)
    return out


# -- cofinality and fundamental sequences --------------------------------------------

class Cof(enum.Enum):
    ZERO = "zero"
    SUCCESSOR = "successor"
    OMEGA = "omega"
    UNCOUNTABLE = "Omega"


def cofinality(t: HB) -> Cof:
    if not t.terms:
        return Cof.ZERO
    last = t.terms[-1]
    if isinstance(last, Psi):
        return Cof.SUCCESSOR if not last.arg else Cof.OMEGA
    if isinstance(last, UPsi):
        return Cof.OMEGA
    if cofinality(last.coeff) is Cof.OMEGA:
        return Cof.OMEGA
    ce = cofinality(last.exp)
    return Cof.UNCOUNTABLE if ce is Cof.SUCCESSOR else ce


def _x_int(x: int | HB) -> int:
    return x if isinstance(x, int) else nat_value(x)


def _x_hb(x: int | HB) -> HB:
    return nat(x) if isinstance(x, int) else x


def fund_hb(t: HB, x: int | HB) -> HB:
    """t[x]; x is a natural, or a countable term when t has cofinality Omega."""
    if not t.terms:
        return ZERO
    init, last = HB(t.terms[:-1]), t.terms[-1]
    if isinstance(last, (Psi, UPsi)):
        prefix = HB(init.terms + ((type(last)(last.arg, last.n - 1),) if last.n > 1 else ()))
        f = _fund_psi if isinstance(last, Psi) else _fund_upsi
        return hb_add(prefix, f(last.arg, x))
    e, c = last.exp, last.coeff
    if cofinality(c) is Cof.OMEGA:
        return hb_add(init, omega_pow_hb(e, fund_hb(c, x)))
    prefix = hb_add(init, omega_pow_hb(e, hb_pred(c)))
    if cofinality(e) is Cof.SUCCESSOR:
        tail = omega_pow_hb(hb_pred(e), _x_hb(x))
    else:
        tail = omega_pow_hb(fund_hb(e, x), ONE)
    return hb_add(prefix, tail)


def _fund_psi(a: HB, x: int | HB) -> HB:
    ca = cofinality(a)
    if ca is Cof.ZERO:
        return ZERO
    n = _x_int(x)
    if ca is Cof.SUCCESSOR:
        return HB((Psi(hb_pred(a), n),)) if n else ZERO
    if ca is Cof.OMEGA:
        return psi(fund_hb(a, n))
    lam = fund_hb(a, ZERO)
    for _ in range(n):
        lam = fund_hb(a, psi(lam))
    return psi(lam)


def _fund_upsi(a: HB, x: int | HB) -> HB:
    ca = cofinality(a)
    n = _x_int(x)
    if ca is Cof.SUCCESSOR:
        return hb_add(upsi(hb_pred(a)), HB((Psi(ONE, n),)) if n else ZERO)
    if ca is Cof.OMEGA:
        return upsi(fund_hb(a, n))
    # Psi(0) is not a term, so the iteration starts from a[1]
    lam = fund_hb(a, ONE)
    for _ in range(n):
        lam = fund_hb(a, upsi(lam))
    return upsi(lam)


# -- evaluation into epsilon_0 -------------------------------------------------------------

def from_e0(a: Ord) -> HB:
    return HB(tuple(Psi(from_e0(e), c) for e, c in a.terms))


def hb_eval_countable(t: HB) -> Ord:
    """The OrdE0 value of an Omega-free, Psi-free term, using psi(a) = omega^a."""
    acc = E0_ZERO
    for s in t.terms:
        if not isinstance(s, Psi):
            raise NotCountable(f"{format_hb(t)} is not an Omega-free psi term")
        acc = add_e0(acc, omega_pow(hb_eval_countable(s.arg), s.n))
    return acc


def hb_eval_otp(t: HB) -> Ord:
    """Value of a countable OT' term with Psi(d) = omega^2 * d for countable d."""
    acc = E0_ZERO
    for s in t.terms:
        if isinstance(s, UPsi):
            v = e0_omega_mul(hb_eval_otp(s.arg), 2)
            for _ in range(s.n - 1):
                v = add_e0(v, e0_omega_mul(hb_eval_otp(s.arg), 2))
            acc = add_e0(acc, v)
        elif isinstance(s, Psi):
            acc = add_e0(acc, omega_pow(hb_eval_countable(s.arg), s.n))
        else:
            raise NotCountable(f"{format_hb(t)} is not countable")
    return acc


# -- printing and parsing -------------------------------------------------------------------

def _fmt_atom(s: Psi | UPsi) -> str:
    if isinstance(s, UPsi):
        return f"P({format_hb(s.arg)})"
    if is_nat(s.arg):
        j = nat_value(s.arg)
        return "w" if j == 1 else f"w^({j})"
    return f"p({format_hb(s.arg)})"


def _fmt_coeff(c: HB) -> str:
    if is_nat(c):
        return str(nat_value(c))
    if len(c.terms) == 1 and not isinstance(c.terms[0], OmegaPow) and c.terms[0].n == 1:
        return _fmt_atom(c.terms[0])
    return f"({format_hb(c)})"


def format_hb(t: HB) -> str:
    if not t.terms:
        return "0"
    parts = []
    for s in t.terms:
        if isinstance(s, OmegaPow):
            p = "W" if s.exp == ONE else f"W^({format_hb(s.exp)})"
            if s.coeff != ONE:
                p += "*" + _fmt_coeff(s.coeff)
        elif isinstance(s, Psi) and not s.arg:
            p = str(s.n)
        else:
            p = _fmt_atom(s) + (f"*{s.n}" if s.n > 1 else "")
        parts.append(p)
    return "+".join(parts)


class _Parser:
    def __init__(self, text: str):
        self.s = text
        self.i = 0

    def fail(self, msg: str, pos: int | None = None):
        raise ParseError(msg, self.i if pos is None else pos, self.s)

    def peek(self) -> str:
        return self.s[self.i] if self.i < len(self.s) else ""

    def eat(self, tok: str) -> bool:
        if self.s.startswith(tok, self.i):
            self.i += len(tok)
            return True
        return False

    def expect(self, tok: str) -> None:
        if not self.eat(tok):
            self.fail(f"expected {tok!r}")

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

    def multiplier(self) -> int:
        if not self.eat("*"):
            return 1
        pos = self.i
        n = self.number()
        if n < 2:
            self.fail("coefficient must be at least 2 when written", pos)
        return n

    def expr(self) -> HB:
        if self.peek() == "0" and not self.s[self.i + 1:self.i + 2].isdigit():
            self.i += 1
            return ZERO
        out = [self.summand()]
        while self.eat("+"):
            pos = self.i
            s = self.summand()
            try:
                ok = cmp_atom(out[-1], s) > 0
            except MixedSystems as e:
                self.fail(str(e), pos)
            if not ok:
                self.fail("summands must be strictly decreasing", pos)
            out.append(s)
        return HB(tuple(out))

    def paren(self) -> HB:
        self.expect("(")
        e = self.expr()
        self.expect(")")
        return e

    def atom(self) -> Psi | UPsi:
        start = self.i
        if self.eat("w"):
            e = ONE
            if self.eat("^"):
                e = self.paren()
                if not is_nat(e) or nat_value(e) < 2:
                    self.fail("use w, a natural, or p(...) for this exponent", start)
            return Psi(e, 1)
        if self.eat("p"):
            a = self.paren()
            if is_nat(a):
                self.fail("psi of a natural is written with w", start)
            return Psi(a, 1)
        if self.eat("P"):
            a = self.paren()
            if not a:
                self.fail("P(0) is not a term", start)
            return UPsi(a, 1)
        self.fail("expected a summand")

    def summand(self) -> Summand:
        start = self.i
        if self.peek().isdigit():
            n = self.number()
            if n == 0:
                self.fail("zero summand", start)
            return Psi(ZERO, n)
        if self.eat("W"):
            e = ONE
            if self.eat("^"):
                e = self.paren()
                if not e or e == ONE:
                    self.fail("non-canonical Omega exponent", start)
            c = ONE
            if self.eat("*"):
                c = self.coeff()
                if c == ONE:
                    self.fail("coefficient 1 is not written", start)
            if not is_countable(c):
                self.fail("Omega coefficients must be countable", start)
            return OmegaPow(e, c)
        a = self.atom()
        return type(a)(a.arg, self.multiplier())

    def coeff(self) -> HB:
        if self.peek().isdigit():
            return nat(self.number())
        if self.peek() == "(":
            c = self.paren()
            if is_nat(c) or (len(c.terms) == 1 and not isinstance(c.terms[0], OmegaPow)
                             and c.terms[0].n == 1):
                self.fail("needless parentheses")
            return c
        return HB((self.atom(),))


def parse_hb(text: str) -> HB:
    p = _Parser(text)
    t = p.expr()
    if p.i != len(text):
        p.fail("unexpected trailing input")
    return t
