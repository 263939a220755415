"""Executable lemma suites S1..S13.

Every suite returns a Report that separates checked cases, counterexamples and
inconclusive cases (a budget got in the way).  Sampled suites are seeded, so a
report is a function of its parameters.
"""
from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field
from typing import Callable

from . import buchholz as hb
from .ackermann import DEFAULT_CAP_BITS, EvaluationTooDeep, Exceeded, ack_ord
from .assignment import assign, assign_part1, assign_part2, compare, fmt, fund, lift_ord, ord_simple
from .base_change import base_change
from .contexts import (BelowFirst, Context, PreconditionViolated, SuccessorCase,
                       lambda_context, star_decompose, subst, truncate)
from .goodstein import PAIRED_MAP, VARIANTS, BudgetStop, gstep, initial_state, ordinal_of, run
from .normal_form import (DEFAULT_NCAP, CertificationImpossible, KType, classify_type,
                          eval_term, hereditary, knf, knf_fin, knf_ord, mixed)
from .ordinal_e0 import (Ord, cmp_e0, format_e0, fund_e0, is_limit, mc_e0, nat, ncount,
                         omega_pow, random_ord, reach, succ)

SUITES = {
    "S1": "bc_monotonicity",
    "S2": "nf_preservation",
    "S3": "assign_invariance",
    "S4": "assign_descent",
    "S5": "sandwich",
    "S6": "bachmann_e0",
    "S7": "hb_fundseq_nf",
    "S8": "star_roundtrip",
    "S9": "maj_max_small",
    "S10": "lambda_context",
    "S11": "descent_trace",
    "S12": "monotone_std",
    "S13": "part1_part2_consistency",
}

OP_MAP = {"prime": "psi", "second": "chi", "first": "xi"}
SANDWICH_SHIFT = {"psi": 2, "chi": 2, "xi": 1}


@dataclass
class Params:
    m_max: int = 200
    k_min: int = 3
    k_max: int = 4
    samples: int = 1000
    seed: int = 1
    parts: tuple[int, ...] = (1, 2)
    cap_bits: int = DEFAULT_CAP_BITS
    ncap: int = DEFAULT_NCAP
    max_count: int = 7
    depth: int = 5
    step_budget: int = 100_000

    @property
    def ks(self) -> range:
        return range(self.k_min, self.k_max + 1)


@dataclass
class Report:
    suite: str
    name: str
    params: dict
    cases: int = 0
    counterexamples: list[str] = field(default_factory=list)
    inconclusive: int = 0
    evaluable: int | None = None

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {"suite": self.suite, "name": self.name, "params": self.params, "cases": self.cases,
                "counterexamples": sorted(self.counterexamples), "inconclusive": self.inconclusive,
                "evaluable": self.evaluable}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    def summary(self) -> str:
        s = (f"{self.suite} {self.name}: {self.cases} cases, {len(self.counterexamples)} "
             f"counterexamples, {self.inconclusive} inconclusive")
        return s + (f", {self.evaluable} evaluable" if self.evaluable is not None else "")


class _Sweep:
    """Collects outcomes; a check either holds, fails, or is inconclusive."""

    def __init__(self, report: Report):
        self.r = report

    def check(self, ok: bool, where: str) -> None:
        self.r.cases += 1
        if not ok:
            self.r.counterexamples.append(where)

    def skip(self) -> None:
        self.r.inconclusive += 1


_BUDGET = (Exceeded, CertificationImpossible, EvaluationTooDeep, BudgetStop)


def _bc(m: int, k: int, op: str, part: int, cap: int) -> int:
    t = base_change(hereditary(m, k, part, cap), k, op, cap)
    v = eval_term(t, k + 1, cap)
    if not v.is_exact:
        raise Exceeded("base change over the cap")
    return v.value


# -- S1..S5: number-theoretic lemmas -------------------------------------------------

def _s1(p: Params, sw: _Sweep) -> None:
    for part in p.parts:
        for k in p.ks:
            for op in ("prime", "second", "first", "iter"):
                prev = None
                for m in range(p.m_max + 1):
                    where = f"part={part} k={k} op={op} m={m}"
                    try:
                        v = _bc(m, k, op, part, p.cap_bits)
                    except _BUDGET:
                        sw.skip()
                        prev = None
                        continue
                    sw.check(m <= v, where + f": m > m* = {v}")
                    if m >= k:
                        sw.check(m < v, where + f": m* = {v} not above m")
                    if op != "iter" and prev is not None:
                        sw.check(prev < v, where + f": (m-1)* = {prev} >= m* = {v}")
                    prev = v


def _s2(p: Params, sw: _Sweep) -> None:
    cap = p.cap_bits
    for part in p.parts:
        for k in p.ks:
            for op in ("prime", "second", "first"):
                for m in range(1, p.m_max + 1):
                    where = f"part={part} k={k} op={op} m={m}"
                    try:
                        t = hereditary(m, k, part, cap)
                        t2 = base_change(t, k, op, cap)
                        v = eval_term(t2, k + 1, cap)
                        if not v.is_exact:
                            raise Exceeded
                        nf = knf(v.value, k + 1, part, cap, p.ncap)
                    except _BUDGET:
                        sw.skip()
                        continue
                    sw.check(nf.l == t.l, where + f": remainder {t.l} became {nf.l}")
                    sw.check(hereditary(v.value, k + 1, part, cap) == t2,
                             where + ": base-changed term is not the (k+1)-normal form")
    # domination off normal form, finite indices: A_a(k,b) <= A_{a*}(k+1,b*)
    for k in p.ks:
        for op in ("prime", "second", "first"):
            for a in range(4):
                for b in range(25):
                    where = f"k={k} op={op} A_{a}({k},{b})"
                    try:
                        a2 = a if op == "second" else _bc(a, k, op, 1, cap)
                        b2 = b if op == "first" else _bc(b, k, op, 1, cap)
                    except _BUDGET:
                        sw.skip()
                        continue
                    ok = ack_ord(a, k, b, cap).leq(ack_ord(a2, k + 1, b2, cap))
                    if ok is None:
                        sw.skip()
                    else:
                        sw.check(ok, where + f" above A_{a2}({k + 1},{b2})")


def _s3(p: Params, sw: _Sweep) -> None:
    cap = p.cap_bits
    for part in p.parts:
        for k in p.ks:
            for op, name in OP_MAP.items():
                for m in range(p.m_max + 1):
                    where = f"part={part} k={k} map={name} m={m}"
                    try:
                        t = hereditary(m, k, part, cap)
                        x = assign(name, t, k, part, cap)
                        y = assign(name, base_change(t, k, op, cap), k + 1, part, cap)
                    except _BUDGET:
                        sw.skip()
                        continue
                    sw.check(compare(x, y) == 0, where + f": {fmt(x)} became {fmt(y)}")


def _s4(p: Params, sw: _Sweep) -> None:
    cap = p.cap_bits
    for part in p.parts:
        for k in p.ks:
            for name in ("psi", "chi", "xi"):
                prev = None
                for m in range(p.m_max + 1):
                    try:
                        x = assign(name, m, k, part, cap)
                    except _BUDGET:
                        sw.skip()
                        prev = None
                        continue
                    if prev is not None:
                        sw.check(compare(prev, x) < 0,
                                 f"part={part} k={k} map={name} m={m}: {fmt(prev)} >= {fmt(x)}")
                    prev = x
            # the flat assignment descends along iter-then-minus-one
            for m in range(1, p.m_max + 1):
                where = f"part={part} k={k} map=simple m={m}"
                try:
                    x = ord_simple(m, k, part, cap)
                    y = ord_simple(_bc(m, k, "iter", part, cap) - 1, k + 1, part, cap)
                except _BUDGET:
                    sw.skip()
                    continue
                sw.check(cmp_e0(y, x) < 0, where + f": {format_e0(y)} >= {format_e0(x)}")


def _s5(p: Params, sw: _Sweep) -> None:
    cap = p.cap_bits
    for part in p.parts:
        for k in p.ks:
            for op, name in OP_MAP.items():
                shift = SANDWICH_SHIFT[name]
                for m in range(1, p.m_max + 1):
                    where = f"part={part} k={k} map={name} m={m}"
                    try:
                        x = assign(name, m, k, part, cap)
                        y = assign(name, _bc(m, k, op, part, cap) - 1, k + 1, part, cap)
                        lo = fund(x, k - shift)
                    except _BUDGET:
                        sw.skip()
                        continue
                    sw.check(compare(x, y) > 0 and compare(y, lo) >= 0,
                             where + f": {fmt(x)} > {fmt(y)} >= {fmt(lo)} fails")


# -- S6..S8, S10: ordinal kernels -----------------------------------------------------

def _walk_below(rng: random.Random, a: Ord, floor: Ord) -> Ord | None:
    """A random ordinal strictly between floor and a, reached by fundamental steps."""
    cur = a
    for _ in range(rng.randint(1, 4)):
        nxt = fund_e0(cur, rng.randint(1, 6))
        if cmp_e0(nxt, floor) <= 0:
            break
        cur = nxt
    return cur if cmp_e0(cur, a) < 0 else None


def _s6(p: Params, sw: _Sweep) -> None:
    rng = random.Random(p.seed)
    done = 0
    while done < p.samples:
        a = random_ord(rng, p.max_count, p.depth)
        if not is_limit(a):
            continue
        x = rng.randint(0, 5)
        ax = fund_e0(a, x)
        if cmp_e0(ax, a) >= 0:
            # a broken sequence would otherwise leave no room to sample b
            done += 1
            sw.check(False, f"a={format_e0(a)} x={x}: a[x] is not below a")
            continue
        b = _walk_below(rng, a, ax)
        if b is None or cmp_e0(ax, b) >= 0:
            b = random_ord(rng, p.max_count, p.depth)
            if not (cmp_e0(ax, b) < 0 < cmp_e0(a, b)):
                continue
        done += 1
        sw.check(cmp_e0(ax, fund_e0(b, 1)) <= 0,
                 f"a={format_e0(a)} x={x} b={format_e0(b)}: a[x] > b[1]")


def random_hb(rng: random.Random, depth: int = 3, countable: bool = False) -> hb.HB:
    """A random well-formed OT term (not necessarily in normal form)."""
    summands = []
    for _ in range(rng.randint(1, 3)):
        kind = rng.random()
        if depth <= 0 or kind < 0.3:
            summands.append(hb.Psi(hb.ZERO, rng.randint(1, 4)))
        elif kind < 0.6 or countable:
            summands.append(hb.Psi(random_hb(rng, depth - 1), rng.randint(1, 2)))
        else:
            e = random_hb(rng, depth - 1)
            if e:
                summands.append(hb.OmegaPow(e, random_hb(rng, depth - 1, countable=True)))
    summands.sort(key=_HBKey, reverse=True)
    out = hb.ZERO
    for s in summands:
        out = hb.hb_add(out, hb.HB((s,)))
    return out


class _HBKey:
    __slots__ = ("s",)

    def __init__(self, s):
        self.s = s

    def __lt__(self, other: "_HBKey") -> bool:
        return hb.cmp_atom(self.s, other.s) < 0


def _s7(p: Params, sw: _Sweep) -> None:
    rng = random.Random(p.seed)
    done = 0
    while done < p.samples:
        t = random_hb(rng, depth=3)
        if not t or not hb.is_nf(t):
            continue
        done += 1
        x = rng.randint(0, 4)
        try:
            f = hb.fund_hb(t, x)
        except RecursionError:
            sw.skip()
            continue
        where = f"t={hb.format_hb(t)} x={x}"
        sw.check(hb.is_nf(f), where + f": {hb.format_hb(f)} leaves normal form")
        sw.check(hb.cmp_hb(f, t) < 0, where + f": {hb.format_hb(f)} not below t")
    # images of the part-2 maps, which live in OT and OT'
    for k in p.ks:
        for m in range(1, min(p.m_max, 300) + 1):
            for name in ("psi", "xi"):
                t = assign_part2(name, m, k, p.cap_bits)
                for x in range(4):
                    f = hb.fund_hb(t, x)
                    where = f"{name}_{k}({m})={hb.format_hb(t)} x={x}"
                    sw.check(hb.is_nf(f) and hb.cmp_hb(f, t) < 0,
                             where + f": {hb.format_hb(f)}")


def _s8(p: Params, sw: _Sweep) -> None:
    rng = random.Random(p.seed)
    done = 0
    while done < p.samples:
        a = random_ord(rng, p.max_count, p.depth)
        b = random_ord(rng, p.max_count, p.depth)
        c = cmp_e0(a, b)
        if c == 0:
            continue
        if c > 0:
            a, b = b, a
        done += 1
        where = f"a={format_e0(a)} b={format_e0(b)}"
        try:
            res = star_decompose(a, b)
        except AssertionError as e:
            sw.check(False, where + f": {e}")
            continue
        if isinstance(res, SuccessorCase):
            sw.check(succ(a) == b, where + ": not a successor pair")
        elif isinstance(res, BelowFirst):
            sw.check(cmp_e0(a, fund_e0(b, 1)) < 0, where + ": a >= b[1]")
        else:
            lam, g, r = res.ctx, res.gamma, res.r
            star = truncate(lam)
            ok = (subst(lam, omega_pow(g, r)) == a and subst(star, omega_pow(succ(g))) == b
                  and cmp_e0(a, subst(star, omega_pow(g, r + 1))) < 0)
            sw.check(ok, where + f": context {lam} gamma={format_e0(g)} r={r}")


def _lift_context(ctx: Context, filler: hb.HB, k: int, cap: int) -> hb.HB:
    """(psi_k lambda)<filler>: lift the material around the hole, put filler in it."""
    def lift_terms(terms):
        return lift_ord("psi", mixed(Ord(tuple(terms)), k, cap), k, cap)

    middle = filler if ctx.inner is None else hb.omega_pow_hb(_lift_context(ctx.inner, filler, k, cap))
    return hb.hb_add(hb.hb_add(lift_terms(ctx.before), middle), lift_terms(ctx.after))


def _s10(p: Params, sw: _Sweep) -> None:
    rng = random.Random(p.seed)
    cap = p.cap_bits
    done = 0
    while done < p.samples:
        a = random_ord(rng, p.max_count, p.depth)
        k = rng.choice(list(p.ks))
        try:
            ctx, g, r = lambda_context(a, k)
        except PreconditionViolated:
            continue
        done += 1
        where = f"k={k} a={format_e0(a)}"
        sw.check(subst(ctx, omega_pow(g, r)) == a, where + f": {ctx} does not rebuild a")
        r_limit = classify_type(r, k, cap) is KType.LIMIT
        g_tail = bool(g.terms) and not g.terms[-1][0].terms and \
            classify_type(g.terms[-1][1], k, cap) is KType.SUCCESSOR
        sw.check(r_limit or g_tail, where + f": p={r}, gamma={format_e0(g)} fit no case")
        try:
            lhs = lift_ord("psi", mixed(a, k, cap), k, cap)
            filler = hb.omega_pow_hb(lift_ord("psi", mixed(g, k, cap), k, cap),
                                     assign_part2("psi", r, k, cap))
            rhs = _lift_context(ctx, filler, k, cap)
        except _BUDGET:
            sw.skip()
            continue
        sw.check(hb.cmp_hb(lhs, rhs) == 0,
                 where + f": {hb.format_hb(lhs)} != {hb.format_hb(rhs)}")


# -- S9, S12: Ackermann lemmas on evaluable instances -------------------------------------

def _s9(p: Params, sw: _Sweep) -> None:
    cap = p.cap_bits
    n = 0
    for k in p.ks:
        for b in range(1, 30):
            vals = [ack_ord(a, k, b, cap) for a in range(6)]
            for a in range(5):
                for beta in range(a + 1, 6):
                    where = f"k={k} b={b} a={a} beta={beta}"
                    ok = vals[a + 1].leq(vals[beta])
                    if ok is None:
                        sw.skip()
                        continue
                    n += 1
                    res = star_decompose(nat(a), nat(beta))
                    first = (isinstance(res, SuccessorCase) and beta == a + 1) or \
                        (isinstance(res, BelowFirst) and a + 1 <= beta - 1)
                    sw.check(first, where + f": decomposition {res}")
                    sw.check(ok, where + ": A_(a+1)(b) > A_beta(b)")
                # maximality hypothesis: no larger index gives a value <= A_a(b)
                if vals[a].is_exact:
                    for d in range(a + 1, 6):
                        sw.check(not vals[d].is_exact or vals[d].value > vals[a].value,
                                 f"k={k} b={b}: A_{d}(b) <= A_{a}(b)")
    sw.r.evaluable = n


def _s12(p: Params, sw: _Sweep) -> None:
    cap = p.cap_bits
    rng = random.Random(p.seed)
    idx: list[Ord] = [nat(a) for a in range(5)]
    idx += [random_ord(rng, 4, 3) for _ in range(20)]
    n = 0
    for k in p.ks:
        for a in idx:
            for b in range(0, 25):
                where = f"k={k} a={format_e0(a)} b={b}"
                try:
                    v = ack_ord(a, k, b, cap)
                except EvaluationTooDeep:
                    sw.skip()
                    continue
                if not v.is_exact:
                    sw.skip()
                    continue
                n += 1
                v1 = ack_ord(a, k, b + 1, cap)
                sw.check(v1.leq(v) is False, where + ": not strictly monotone in b")
                sw.check(mc_e0(a) < v.value, where + ": mc(a) >= A_a(b)")
                sw.check(v.value >= ncount(a) + b, where + ": A_a(b) < N(a)+b")
                if a:
                    sw.check(v.value > 2 * b, where + ": A_a(b) <= 2b")
                sw.check(ack_ord(a, k, b, cap, memo=False) == v, where + ": memo disagrees")
                for c in idx:
                    if cmp_e0(a, c) < 0 and mc_e0(a) <= b:
                        ok = v.leq(ack_ord(c, k, b, cap))
                        if ok is None:
                            sw.skip()
                        else:
                            sw.check(ok, where + f": A_a(b) > A_{format_e0(c)}(b)")
    sw.r.evaluable = n


# -- S11, S13 --------------------------------------------------------------------------------

def _s11(p: Params, sw: _Sweep) -> None:
    cap = p.cap_bits
    seeds = range(1, min(p.m_max, 6) + 1)
    for part in p.parts:
        for variant in VARIANTS:
            for m in seeds:
                where = f"part={part} variant={variant} seed={m}"
                tr = run(m, variant, part, max_steps=10_000, cap=cap)
                for st in tr.steps:
                    sw.check(st.descent_ok, where + f" l={st.l}: no descent")
                if variant == "iter":
                    continue
                # o(m,l+1) >=_1 o(m,l)[shift'] along the run
                name = PAIRED_MAP[variant]
                s = initial_state(m, part, cap)
                prev = ordinal_of(s, variant, cap)
                while s.term is not None:
                    s = gstep(s, variant, cap)
                    cur = ordinal_of(s, variant, cap)
                    target = fund(prev, s.k - 1 - SANDWICH_SHIFT[name])
                    if isinstance(cur, Ord):
                        res = reach(cur, target, 1, p.step_budget, fund_e0, cmp_e0)
                    else:
                        res = reach(cur, target, 1, p.step_budget, hb.fund_hb, hb.cmp_hb)
                    if res.status == "budget":
                        sw.skip()
                    else:
                        sw.check(res.status == "reached",
                                 where + f" l={s.l}: {fmt(cur)} does not 1-reach {fmt(target)}")
                    prev = cur


def _s13(p: Params, sw: _Sweep) -> None:
    cap = p.cap_bits
    for k in p.ks:
        for m in range(1, p.m_max + 1):
            where = f"k={k} m={m}"
            try:
                n1 = knf_fin(m, k, cap)
                n2 = knf_ord(m, k, p.ncap, cap)
            except _BUDGET:
                sw.skip()
                continue
            same = n2.index == nat(n1.index) and (n1.b, n1.l) == (n2.b, n2.l)
            sw.check(same, where + f": {n1} vs {n2}")
            psi1 = assign_part1("psi", m, k, cap)
            sw.check(hb.hb_eval_countable(assign_part2("psi", m, k, cap)) == psi1,
                     where + ": psi images disagree")
            sw.check(assign_part2("chi", m, k, cap) == assign_part1("chi", m, k, cap),
                     where + ": chi images disagree")
            sw.check(hb.hb_eval_otp(assign_part2("xi", m, k, cap)) == assign_part1("xi", m, k, cap),
                     where + ": xi images disagree")


_RUNNERS: dict[str, Callable[[Params, _Sweep], None]] = {
    "S1": _s1, "S2": _s2, "S3": _s3, "S4": _s4, "S5": _s5, "S6": _s6, "S7": _s7,
    "S8": _s8, "S9": _s9, "S10": _s10, "S11": _s11, "S12": _s12, "S13": _s13,
}


def run_suite(suite: str, params: Params | None = None, **overrides) -> Report:
    """Run one suite; keyword overrides replace fields of params."""
    if suite not in _RUNNERS:
        raise ValueError(f"unknown suite {suite!r}")
    p = params or Params()
    if overrides:
        p = Params(**{**asdict(p), **overrides})
    report = Report(suite, SUITES[suite], asdict(p))
    if suite in ("S1", "S2", "S3", "S4", "S5", "S13") and p.m_max < 1:
        return report
    _RUNNERS[suite](p, _Sweep(report))
    report.counterexamples.sort()
    return report
