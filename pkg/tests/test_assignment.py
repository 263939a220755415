import pytest

from giant_goodstein import buchholz as hb
from giant_goodstein.assignment import (assign, assign_part1, assign_part2, compare, fmt,
                                        lift_ord, ord_simple)
from giant_goodstein.goodstein import mr_seed
from giant_goodstein.normal_form import Node, hereditary, mixed
from giant_goodstein.ordinal_e0 import ZERO, OMEGA, format_e0, nat, parse_e0


@pytest.mark.parametrize("name,m,want", [
    ("psi", 0, "0"), ("psi", 39, "w^(w)"), ("psi", 4, "w+1"),
    ("chi", 39, "w^(w)"), ("xi", 39, "w^(2)"),
])
def test_part1_examples(name, m, want):
    assert format_e0(assign_part1(name, m, 3)) == want


def test_part1_symbolic():
    assert format_e0(assign_part1("psi", mr_seed(2), 3)) == "w^(w^(w))"


def test_part2_examples():
    a_omega = Node(mixed(OMEGA, 3), None, 0)
    assert fmt(assign_part2("psi", a_omega, 3)) == "p(W)"
    assert fmt(assign_part2("xi", a_omega, 3)) == "P(W)"
    a_ww = Node(mixed(parse_e0("w^(w)"), 3), None, 0)
    assert fmt(assign_part2("chi", a_ww, 3)) == "w^(w^(w))"
    assert fmt(assign_part2("psi", 39, 3)) == "p(w)"
    assert format_e0(hb.hb_eval_countable(assign_part2("psi", 39, 3))) == "w^(w)"


def test_lift_examples():
    assert lift_ord("psi", mixed(ZERO, 3), 3) == hb.ZERO
    assert lift_ord("psi", mixed(OMEGA, 3), 3) == hb.BIG_OMEGA
    assert fmt(lift_ord("psi", mixed(parse_e0("w^(w)"), 3), 3)) == "W^(W)"


def test_ord_simple_examples():
    assert ord_simple(0, 3) == ZERO
    assert format_e0(ord_simple(4, 3, 1)) == "w^(2)+1"
    assert format_e0(ord_simple(39, 3, 2)) == "w^(2)"
    assert ord_simple(2, 3) == nat(2)


def test_unknown_map():
    with pytest.raises(ValueError):
        assign_part1("phi", 5, 3)


@pytest.mark.parametrize("part", [1, 2])
@pytest.mark.parametrize("name", ["psi", "chi", "xi", "simple"])
def test_strictly_increasing_in_m(part, name):
    prev = None
    for m in range(0, 400):
        x = assign(name, m, 3, part)
        if prev is not None:
            assert compare(prev, x) < 0, (name, part, m)
        prev = x


@pytest.mark.parametrize("name", ["psi", "xi"])
def test_part2_images_are_normal(name):
    for m in range(0, 300):
        x = assign_part2(name, m, 4)
        assert hb.is_nf(x)


def test_chi_same_in_both_parts():
    # chi lands in epsilon_0 either way; on finite indices the two definitions coincide
    for m in range(1, 200):
        p1 = assign_part1("chi", m, 3)
        p2 = assign_part2("chi", m, 3)
        assert p1 == p2


def test_accepts_terms_and_numbers():
    assert assign_part1("psi", hereditary(100, 3), 3) == assign_part1("psi", 100, 3)
    assert assign("psi", 1, 3) == nat(1)
