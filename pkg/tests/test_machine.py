import random

import pytest
from hypothesis import given, settings, strategies as st

from incore.closure import closure_trace, is_inconsistent, theory_of
from incore.errors import ExpressionError
from incore.machine import (PA_MI_CAP, BinOp, Lit, SatValue, eval_exact, eval_guarded,
                            format_expr, generate_pa_mi, mi_axiom, parse_expr,
                            reflexivity_axioms, saturating_op)

from generators import random_expr


def sat(v, saturated=False):
    return SatValue(v, saturated)


@pytest.mark.parametrize("a, b, expected", [
    (60, 50, sat(100, True)),
    (100, 1, sat(100, True)),
    (30, 40, sat(70)),
    (-60, -50, sat(-100, True)),
])
def test_saturating_add(a, b, expected):
    assert saturating_op("add", sat(a), sat(b), 100) == expected


def test_machine_infinity_absorbs_successor():
    top = sat(100, True)
    assert saturating_op("add", top, sat(1), 100) == top
    assert saturating_op("add", sat(100), sat(0), 100) == sat(100)


def test_saturation_is_sticky():
    assert saturating_op("sub", sat(100, True), sat(50), 100) == sat(50, True)


@settings(max_examples=200)
@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(1, 50))
def test_commutative_and_in_range(a, b, m):
    a, b = max(-m, min(m, a)), max(-m, min(m, b))
    for kind in ("add", "mul"):
        out = saturating_op(kind, sat(a), sat(b), m)
        assert out == saturating_op(kind, sat(b), sat(a), m)
        assert abs(out.value) <= m


@settings(max_examples=200)
@given(st.integers(1, 10**6), st.integers(1, 10**6))
def test_top_plus_positive_stays_top(m, k):
    assert saturating_op("add", sat(m), sat(min(k, m)), m).value == m


@pytest.mark.parametrize("text, value, safe, exact", [
    ("(30+40)-10", 60, True, 60),
    ("(60+50)-50", 50, False, 60),
    ("10×10", 100, False, 100),
    ("10*10", 100, False, 100),
    ("-5 * 3", -15, True, -15),
])
def test_eval_guarded_examples(text, value, safe, exact):
    verdict = eval_guarded(text, 100)
    assert verdict.result.value == value and verdict.safe is safe
    assert eval_exact(parse_expr(text)) == exact


def test_boundary_literal_is_unsafe():
    assert not eval_guarded("100 - 1", 100).safe


@pytest.mark.parametrize("text", ["2 / 1", "x + 1", "1 +", "2 ** 3", "1.5 + 1"])
def test_bad_expressions(text):
    with pytest.raises(ExpressionError):
        eval_guarded(text, 100)


def test_literal_out_of_range():
    with pytest.raises(ExpressionError):
        eval_guarded("101 - 1", 100)


def test_format_round_trip():
    expr = BinOp("sub", BinOp("add", Lit(60), Lit(50)), Lit(-3))
    assert format_expr(expr) == "((60 + 50) - (-3))"
    assert parse_expr(format_expr(expr)) == expr


@settings(max_examples=300)
@given(st.integers(0, 10**9), st.sampled_from([10, 100]))
def test_guard_soundness(seed, m):
    expr = random_expr(random.Random(seed), m)
    verdict = eval_guarded(expr, m)
    if verdict.safe:
        assert verdict.result.value == eval_exact(expr)
        assert not verdict.result.saturated


def test_pa_mi_shape():
    system = generate_pa_mi(2)
    assert len(system.wffs) == 16 and len(system.axioms) == 5
    assert set(system.alphabet) == {"s", "0", "="}
    assert mi_axiom(2) == "sss0=ss0" and mi_axiom(2) in system.axioms
    assert is_inconsistent(system)


def test_pa_mi_one_collapses_through_injectivity():
    system = generate_pa_mi(1)
    assert mi_axiom(1) == "ss0=s0"
    trace = closure_trace(system, system.axioms)
    assert "s0=0" in trace.states[1]
    assert trace.union == system.wffs


@pytest.mark.parametrize("m", range(1, PA_MI_CAP + 1))
def test_pa_mi_inconsistent_up_to_cap(m):
    system = generate_pa_mi(m)
    assert len(system.wffs) == (m + 2) ** 2
    assert is_inconsistent(system)
    assert theory_of(system, reflexivity_axioms(m)) == set(reflexivity_axioms(m))


@pytest.mark.parametrize("m", [0, PA_MI_CAP + 1])
def test_pa_mi_bounds(m):
    with pytest.raises(ValueError):
        generate_pa_mi(m)
