import random

import pytest
from hypothesis import given

from giant_goodstein.contexts import (HOLE, BelowFirst, Context, ContextCase, InvalidFiller,
                                      PreconditionViolated, SuccessorCase, filler, format_context,
                                      lambda_context, star_decompose, subst, truncate)
from giant_goodstein.ordinal_e0 import (ONE, cmp_e0, format_e0, fund_e0, nat, omega_pow, parse_e0,
                                        random_ord, succ)

from strategies import e0_terms

P = parse_e0
W2 = (nat(2), 1)  # the summand w^2
W1 = (ONE, 1)


def test_subst_examples():
    assert subst(HOLE, P("w*2")) == P("w*2")
    assert subst(Context((W2,), None, ()), P("w*3")) == P("w^(2)+w*3")
    in_exp = Context((), Context((W1,), None, ()), ())
    assert format_e0(subst(in_exp, nat(2))) == "w^(w+2)"


def test_subst_rejects_disorder():
    with pytest.raises(InvalidFiller):
        subst(Context((W1,), None, ()), P("w^(2)"))


def test_truncate_examples():
    assert truncate(HOLE) == HOLE
    assert truncate(Context((W2,), None, (W1,))) == Context((W2,), None, ())
    deep = Context((), Context((W1,), None, ((nat(0), 1),)), ((nat(0), 5),))
    assert format_context(truncate(deep)) == "w^(w+[[_]])"


def test_star_examples():
    assert star_decompose(nat(5), nat(6)) == SuccessorCase()
    assert star_decompose(P("w*2"), P("w^(2)")) == ContextCase(HOLE, ONE, 2)
    assert star_decompose(P("w"), P("w^(2)+w")) == BelowFirst()
    with pytest.raises(PreconditionViolated):
        star_decompose(nat(3), nat(3))


def test_lambda_context_examples():
    assert lambda_context(P("w*3"), 3) == (HOLE, ONE, 3)
    with pytest.raises(PreconditionViolated):
        lambda_context(nat(5), 3)
    ctx, gamma, p = lambda_context(P("w^(w)*2"), 3)
    assert (format_context(ctx), gamma, p) == ("w^(w)+w^([[_]])", ONE, 1)
    assert subst(ctx, filler(gamma, p)) == P("w^(w)*2")


def _star_ok(a, b) -> bool:
    r = star_decompose(a, b)
    if isinstance(r, SuccessorCase):
        return b == succ(a)
    if isinstance(r, BelowFirst):
        return cmp_e0(a, fund_e0(b, 1)) < 0
    ctx = r.ctx
    return (subst(ctx, omega_pow(r.gamma, r.r)) == a
            and subst(truncate(ctx), omega_pow(succ(r.gamma))) == b)


def test_star_random_pairs():
    rng = random.Random(7)
    n = 0
    while n < 2000:
        a, b = random_ord(rng), random_ord(rng)
        if cmp_e0(a, b) == 0:
            continue
        if cmp_e0(a, b) > 0:
            a, b = b, a
        assert _star_ok(a, b), (format_e0(a), format_e0(b))
        n += 1


@given(e0_terms, e0_terms)
def test_star_property(a, b):
    if cmp_e0(a, b) < 0:
        assert _star_ok(a, b)
