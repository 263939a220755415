import json

import pytest

from giant_goodstein.goodstein import (VARIANTS, gstep, initial_state, mr_seed, run)
from giant_goodstein.normal_form import Node, eval_term, term_str

import oracles


def test_step_examples():
    s = gstep(initial_state(4), "prime")
    assert (s.l, s.k, s.value.value) == (1, 4, 4)
    assert gstep(initial_state(39), "prime").value.value == 339
    for v in VARIANTS:
        assert gstep(initial_state(1), v).value.value == 0


def test_run_examples():
    t = run(2, "prime")
    assert (t.status, t.length) == ("zero", 2)
    t = run(4, "prime")
    assert (t.status, t.length) == ("zero", 6)
    assert [s.value.value for s in t.steps] == [4, 4, 4, 3, 2, 1]
    for v in VARIANTS:
        t = run(0, v)
        assert (t.status, t.steps) == ("zero", [])


@pytest.mark.parametrize("variant", VARIANTS)
@pytest.mark.parametrize("part", [1, 2])
def test_values_match_oracle(variant, part):
    for m in range(7):
        t = run(m, variant, part)
        assert t.status == "zero"
        assert [s.value.value for s in t.steps] == oracles.goodstein(m, variant)
        assert t.descent_ok


def test_seeds():
    assert eval_term(mr_seed(1), 3).value == 39
    assert mr_seed(2) == Node(mr_seed(1), None, 0)
    assert term_str(mr_seed(2), 3) == "A_39(3,0)"
    assert term_str(mr_seed(1, 2), 3) == "A_w(3,0)"
    with pytest.raises(ValueError):
        mr_seed(0)


def test_symbolic_seed_hits_budget():
    t = run(mr_seed(2), "prime")
    assert t.status == "budget"
    assert t.length == 1 and t.steps[0].value.is_exact is False


def test_max_steps_status():
    t = run(39, "prime", max_steps=5)
    assert (t.status, t.length) == ("max-steps", 5)
    assert t.descent_ok


def test_json_schema():
    t = run(4, "prime")
    obj = json.loads(t.dumps())
    assert set(obj) == {"seed", "variant", "part", "steps", "status"}
    assert obj["seed"] == "4" and obj["part"] == 1 and obj["status"] == "zero"
    step = obj["steps"][0]
    assert set(step) == {"l", "k", "value", "nf", "ordinal", "descent_ok"}
    assert set(step["nf"]) == {"index", "b", "l"}
    assert isinstance(step["value"], str) and isinstance(step["descent_ok"], bool)
    assert step["ordinal"] == "w+1"


def test_csv():
    rows = run(2, "iter").to_csv().splitlines()
    assert rows[0] == "l,k,value,index,b,rem,ordinal,descent_ok"
    assert len(rows) == 3 and rows[1].endswith(",true")


def test_unknown_variant():
    with pytest.raises(ValueError):
        run(3, "other")


def test_seed39_prefix_matches_oracle():
    # the giant run grows slowly at first; its prefix is checked step by step
    t = run(39, "prime", 1, max_steps=120)
    assert [s.value.value for s in t.steps] == oracles.goodstein(39, "prime", max_steps=120)
    assert t.descent_ok
