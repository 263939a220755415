import pytest

from giant_goodstein.base_change import OPS, base_change, bc_ord, bc_value
from giant_goodstein.normal_form import eval_term, hereditary, mixed, mixed_value
from giant_goodstein.ordinal_e0 import format_e0, parse_e0

import oracles


@pytest.mark.parametrize("op,m,want", [
    ("prime", 3, 4), ("prime", 2, 2), ("prime", 39, 340),
    ("second", 0, 0), ("second", 7, 9), ("second", 12, 20),
    ("first", 12, 16), ("first", 39, 340), ("first", 7, 9),
    ("iter", 3, 4), ("iter", 12, 16), ("iter", 2, 2),
])
def test_examples(op, m, want):
    assert bc_value(m, 3, op).value == want


@pytest.mark.parametrize("a,want", [("w", "w"), ("w*3", "w*4"), ("w^(w)*2", "w^(w)*2")])
def test_index_change(a, want):
    out = bc_ord(mixed(parse_e0(a), 3), 3)
    assert format_e0(mixed_value(out, 4)) == want


@pytest.mark.parametrize("op", OPS)
@pytest.mark.parametrize("k", [3, 4])
def test_matches_tree_oracle(op, k):
    for m in range(0, 600):
        try:
            want = oracles.changed(m, k, op)
        except oracles.TooBig:
            continue
        assert bc_value(m, k, op).value == want, (op, k, m)


@pytest.mark.parametrize("op", OPS)
def test_part2_agrees_on_finite_indices(op):
    for m in range(0, 300):
        t1 = base_change(hereditary(m, 3, 1), 3, op)
        t2 = base_change(hereditary(m, 3, 2), 3, op)
        assert eval_term(t1, 4) == eval_term(t2, 4)


def test_unknown_op():
    with pytest.raises(ValueError):
        base_change(hereditary(5, 3), 3, "nope")
