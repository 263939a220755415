"""Acceptance criteria 1-9.  Each test carries a criterion marker; conftest prints
one PASS/FAIL line per criterion in the terminal summary."""
import random
import time
from contextlib import contextmanager

import pytest

from giant_goodstein import buchholz as hb
from giant_goodstein.ackermann import ack_fin
from giant_goodstein.assignment import assign_part1, assign_part2, fmt
from giant_goodstein.goodstein import VARIANTS, mr_seed, run
from giant_goodstein.normal_form import Node, eval_term, hereditary, knf_fin, mixed
from giant_goodstein.ordinal_e0 import (OMEGA, cmp_e0, format_e0, nat, omega_pow, omega_tower,
                                        parse_e0, random_ord)
from giant_goodstein.verifier import random_hb, run_suite

import oracles


@contextmanager
def within(seconds: float):
    start = time.perf_counter()
    yield
    took = time.perf_counter() - start
    assert took < seconds, f"took {took:.1f} s, limit {seconds} s"


def _big_omega_tower(r: int) -> str:
    s = "W"
    for _ in range(r - 1):
        s = f"W^({s})"
    return s


@pytest.mark.criterion(1, "exact identities")
def test_exact_identities():
    with within(1):
        assert ack_fin(2, 3, 0).value == 39
        nf = knf_fin(3, 3)
        assert (nf.index, nf.b, nf.l) == (1, 0, 0)
        assert format_e0(assign_part1("psi", 39, 3)) == "w^(w)"
        a_omega = Node(mixed(OMEGA, 3), None, 0)
        assert assign_part2("psi", a_omega, 3) == hb.psi(hb.BIG_OMEGA)
        a_ww = Node(mixed(parse_e0("w^(w)"), 3), None, 0)
        assert fmt(assign_part2("chi", a_ww, 3)) == "w^(w^(w))"


@pytest.mark.criterion(2, "symbolic towers for r=1..4")
def test_symbolic_towers():
    with within(1):
        for r in range(1, 5):
            assert fmt(assign_part2("psi", mr_seed(r, 2), 3)) == f"p({_big_omega_tower(r)})"
            assert format_e0(assign_part1("psi", mr_seed(r, 1), 3)) == \
                format_e0(omega_tower(r + 1))


@pytest.mark.criterion(3, "lemma sweeps S1-S4, m <= 2000, k in {3,4}")
def test_lemma_sweeps():
    with within(120):
        for suite in ("S1", "S2", "S3", "S4"):
            r = run_suite(suite, m_max=2000, k_min=3, k_max=4)
            assert r.ok, (suite, r.counterexamples[:3])
            assert r.cases > 0


@pytest.mark.criterion(4, "sandwich S5, m <= 1000, k in {3,4}")
def test_sandwich():
    with within(120):
        r = run_suite("S5", m_max=1000, k_min=3, k_max=4)
        assert r.ok, r.counterexamples[:3]
        assert r.cases > 0


@pytest.mark.criterion(5, "termination oracle and descent for seeds <= 6")
def test_termination():
    with within(60):
        t = run(2, "prime")
        assert (t.status, t.length) == ("zero", len(oracles.goodstein(2)))
        assert t.length == 2
        t = run(4, "prime")
        assert (t.status, t.length) == ("zero", len(oracles.goodstein(4)))
        assert t.length == 6
        for part in (1, 2):
            for variant in VARIANTS:
                for m in range(7):
                    t = run(m, variant, part, max_steps=10_000)
                    assert t.status == "zero", (part, variant, m, t.status)
                    assert t.descent_ok, (part, variant, m)


@pytest.mark.criterion(6, "giant-vs-illusionary contrast from seed 39")
def test_contrast():
    with within(60):
        iter_trace = run(39, "iter", 1, max_steps=1000)
        assert iter_trace.descent_ok
        two_w2 = omega_pow(nat(2), 2)
        assert format_e0(two_w2) == "w^(2)*2"
        assert any(cmp_e0(parse_e0(s.ordinal), two_w2) < 0 for s in iter_trace.steps)

        giant = run(39, "prime", 1, max_steps=1000)
        assert giant.descent_ok
        assert giant.length > 0
        # the value budget must be hit inside the horizon
        assert giant.status == "budget", (
            f"status {giant.status} after {giant.length} steps, last value "
            f"{giant.steps[-1].value} ({giant.steps[-1].value.value.bit_length()} bits)")


@pytest.mark.criterion(7, "ordinal kernels S6, S7, S8, S10 at 10^4 samples")
def test_kernels():
    with within(120):
        for suite in ("S6", "S7", "S8", "S10"):
            r = run_suite(suite, samples=10_000, seed=1, max_count=7)
            assert r.ok, (suite, r.counterexamples[:3])
            assert r.cases >= 10_000


@pytest.mark.criterion(8, "bounded-evaluable suites S9, S12")
def test_bounded_suites():
    with within(60):
        for suite in ("S9", "S12"):
            r = run_suite(suite)
            assert r.ok, (suite, r.counterexamples[:3])
            assert r.evaluable and r.evaluable > 0


@pytest.mark.criterion(9, "round trips")
def test_round_trips():
    with within(60):
        rng = random.Random(9)
        for _ in range(10_000):
            a = random_ord(rng)
            assert parse_e0(format_e0(a)) == a
            t = random_hb(rng, depth=3)
            assert hb.parse_hb(hb.format_hb(t)) == t
        for k in (3, 4, 5):
            for part in (1, 2):
                for m in range(5001):
                    assert eval_term(hereditary(m, k, part), k).value == m
