"""Goodstein sequences for the four base-change variants, with descent certificates."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .ackermann import DEFAULT_CAP_BITS, BudgetedNat, Exceeded
from .assignment import assign, compare, fmt
from .base_change import base_change
from .buchholz import HB
from .normal_form import (CertificationImpossible, Node, Term, eval_term, hereditary,
                          index_str, mixed, term_nodes, term_str)
from .ordinal_e0 import Ord, omega_tower

VARIANTS = ("prime", "second", "first", "iter")
PAIRED_MAP = {"prime": "psi", "second": "chi", "first": "xi", "iter": "simple"}
DEFAULT_MAX_TERM_NODES = 100_000


class BudgetStop(Exception):
    """The next state cannot be produced within the value or term budgets."""


@dataclass(frozen=True)
class GoodsteinState:
    l: int
    k: int
    term: Term
    value: BudgetedNat
    part: int = 1


@dataclass(frozen=True)
class StepRecord:
    l: int
    k: int
    value: BudgetedNat
    nf: tuple[str, str, str]
    ordinal: str
    descent_ok: bool

    def to_json(self) -> dict:
        index, b, l = self.nf
        return {"l": self.l, "k": self.k, "value": str(self.value),
                "nf": {"index": index, "b": b, "l": l},
                "ordinal": self.ordinal, "descent_ok": self.descent_ok}


@dataclass
class Trace:
    seed: str
    variant: str
    part: int
    steps: list[StepRecord] = field(default_factory=list)
    status: str = "max-steps"

    @property
    def length(self) -> int:
        """Index l of the state where the run stopped."""
        return len(self.steps)

    @property
    def descent_ok(self) -> bool:
        return all(s.descent_ok for s in self.steps)

    def to_json(self) -> dict:
        return {"seed": self.seed, "variant": self.variant, "part": self.part,
                "steps": [s.to_json() for s in self.steps], "status": self.status}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["l", "k", "value", "index", "b", "rem", "ordinal", "descent_ok"])
        for s in self.steps:
            w.writerow([s.l, s.k, str(s.value), *s.nf, s.ordinal, str(s.descent_ok).lower()])
        return buf.getvalue()


def initial_state(seed: "int | Term", part: int = 1, cap: int = DEFAULT_CAP_BITS) -> GoodsteinState:
    if isinstance(seed, int):
        return GoodsteinState(0, 3, hereditary(seed, 3, part, cap), BudgetedNat.exact(seed, cap), part)
    return GoodsteinState(0, 3, seed, eval_term(seed, 3, cap), part)


def _decrement(t: Term, value: BudgetedNat, k: int, part: int, cap: int) -> tuple[Term, BudgetedNat]:
    """t-1 at base k.  From the value when it is known, else structurally when l > 0."""
    if t is None:
        return None, BudgetedNat.exact(0, cap)
    structural = Node(t.index, t.b, t.l - 1) if t.l > 0 else None
    if value.is_exact:
        try:
            out = hereditary(value.value - 1, k, part, cap)
        except (CertificationImpossible, Exceeded) as e:
            raise BudgetStop(str(e)) from None
        if structural is not None and out != structural:
            raise AssertionError("structural and numeric decrements disagree")
        return out, BudgetedNat.exact(value.value - 1, cap)
    if structural is None:
        raise BudgetStop("over-cap value without a remainder to decrement")
    return structural, value


def gstep(s: GoodsteinState, variant: str, cap: int = DEFAULT_CAP_BITS) -> GoodsteinState:
    """Base change k -> k+1 for the variant, then subtract one (0 stays 0)."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if s.term is None:
        return GoodsteinState(s.l + 1, s.k + 1, None, s.value, s.part)
    try:
        t = base_change(s.term, s.k, variant, cap)
    except Exceeded as e:
        raise BudgetStop(str(e)) from None
    term, value = _decrement(t, eval_term(t, s.k + 1, cap), s.k + 1, s.part, cap)
    return GoodsteinState(s.l + 1, s.k + 1, term, value, s.part)


def ordinal_of(s: GoodsteinState, variant: str, cap: int = DEFAULT_CAP_BITS) -> HB | Ord:
    """o(m,l): the variant's paired map at the current base."""
    return assign(PAIRED_MAP[variant], s.term, s.k, s.part, cap)


def nf_strings(t: Term, k: int, cap: int = DEFAULT_CAP_BITS) -> tuple[str, str, str]:
    if t is None:
        return ("0", "0", "0")
    return (index_str(t.index, k, cap), term_str(t.b, k, cap), str(t.l))


def seed_string(seed: "int | Term", cap: int = DEFAULT_CAP_BITS) -> str:
    return str(seed) if isinstance(seed, int) else term_str(seed, 3, cap)


def run(seed: "int | Term", variant: str = "prime", part: int = 1, max_steps: int = 10_000,
        cap: int = DEFAULT_CAP_BITS, max_term_nodes: int = DEFAULT_MAX_TERM_NODES) -> Trace:
    """Record m_0, m_1, ... until the value hits 0, max_steps states, or a budget."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    trace = Trace(seed_string(seed, cap), variant, part)
    try:
        s = initial_state(seed, part, cap)
    except (CertificationImpossible, Exceeded):
        trace.status = "budget"
        return trace
    prev = None
    while True:
        if s.term is None:
            trace.status = "zero"
            return trace
        if len(trace.steps) >= max_steps:
            trace.status = "max-steps"
            return trace
        if term_nodes(s.term) > max_term_nodes:
            trace.status = "budget"
            return trace
        try:
            o = ordinal_of(s, variant, cap)
        except Exceeded:
            trace.status = "budget"
            return trace
        ok = prev is None or compare(o, prev) < 0
        trace.steps.append(StepRecord(s.l, s.k, s.value, nf_strings(s.term, s.k, cap), fmt(o), ok))
        prev = o
        try:
            s = gstep(s, variant, cap)
        except BudgetStop:
            trace.status = "budget"
            return trace


def mr_seed(r: int, part: int = 1, cap: int = DEFAULT_CAP_BITS) -> Term:
    """m(1) = A_2(3,0), m(r+1) = A_{m(r)}(3,0) for part 1; A_{omega_r}(3,0) for part 2."""
    if r < 1:
        raise ValueError("r must be at least 1")
    if part == 2:
        return Node(mixed(omega_tower(r), 3, cap), None, 0)
    t = hereditary(39, 3, 1, cap)
    for _ in range(r - 1):
        t = Node(t, None, 0)
    return t

