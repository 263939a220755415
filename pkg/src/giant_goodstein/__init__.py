"""Goodstein sequences over Ackermann normal forms, with ordinal descent certificates."""
from .ackermann import BudgetedNat, Exceeded, ack_fin, ack_ord, limit_index
from .assignment import assign, assign_part1, assign_part2, lift_ord, ord_simple
from .base_change import base_change, bc_first, bc_iter, bc_prime, bc_second
from .buchholz import HB, cmp_hb, format_hb, fund_hb, parse_hb
from .goodstein import Trace, gstep, mr_seed, run
from .normal_form import classify_type, eval_term, hereditary, knf, knf_fin, knf_ord
from .ordinal_e0 import Ord, cmp_e0, format_e0, fund_e0, parse_e0
from .verifier import run_suite

__version__ = "0.1.0"

__all__ = [
    "BudgetedNat", "Exceeded", "HB", "Ord", "Trace", "ack_fin", "ack_ord", "assign",
    "assign_part1", "assign_part2", "base_change", "bc_first", "bc_iter", "bc_prime",
    "bc_second", "classify_type", "cmp_e0", "cmp_hb", "eval_term", "format_e0", "format_hb",
    "fund_e0", "fund_hb", "gstep", "hereditary", "knf", "knf_fin", "knf_ord", "lift_ord",
    "limit_index", "mr_seed", "ord_simple", "parse_e0", "parse_hb", "run", "run_suite",
]
