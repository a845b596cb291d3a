import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from incore.errors import DomainError, SystemParseError
from incore.formal import (DeductionSystem, Rule, apply_deduction, formula_length,
                           parse_system, serialize_system, validate_system)
from incore.machine import generate_pa_mi

import oracles
from generators import random_system


@pytest.mark.parametrize("formula, expected", [("p", 1), ("0=0", 3), ("sss0=ss0", 8)])
def test_formula_length(formula, expected):
    assert formula_length(formula) == expected


def test_apply_deduction_ex1(ex1):
    assert apply_deduction(ex1, {"p", "s"}) == {"q", "t"}
    assert apply_deduction(ex1, {"q", "t"}) == {"p", "q", "r", "s", "t"}
    assert apply_deduction(ex1, set()) == frozenset()


def test_apply_deduction_is_not_inflationary(ex1):
    assert not {"p"} <= apply_deduction(ex1, {"p"})


def test_apply_deduction_rejects_non_wffs(ex1):
    with pytest.raises(DomainError):
        apply_deduction(ex1, {"p", "z"})


def test_empty_premise_rules_always_fire():
    system = DeductionSystem("ab", ["a", "b"], [Rule([], ["a"]), Rule(["a"], ["b"])])
    assert apply_deduction(system, set()) == {"a"}
    assert apply_deduction(system, {"a"}) == {"a", "b"}


def test_parse_ex1(ex1):
    assert len(ex1.wffs) == 5
    assert ex1.axioms == {"p", "s"}
    assert len(ex1.rules) == 3


def test_serialize_ex1_is_the_canonical_file(ex1):
    assert serialize_system(ex1).splitlines() == [
        "alphabet p q r s t",
        "wffs p q r s t",
        "axiom p",
        "axiom s",
        "rule p -> q",
        "rule s -> t",
        "rule q t -> p q r s t",
    ]


@pytest.mark.parametrize("text, fragment", [
    ("alphabet p\nwffs p\naxiom z\n", "not in the alphabet"),
    ("alphabet p z\nwffs p\naxiom z\n", "axiom not a declared wff"),
    ("alphabet p\nwffs p pq\n", "'q'"),
    ("alphabet p\nwffs p p\n", "duplicate wff"),
    ("alphabet p\nwffs p\nrule p q\n", "exactly one '->'"),
    ("alphabet p\nwffs p\nrule p ->\n", "no conclusions"),
    ("alphabet p\nwffs p\nlemma p\n", "unknown directive"),
    ("wffs p\n", "wffs before alphabet"),
    ("alphabet p\n", "missing wffs"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(SystemParseError, match=fragment):
        parse_system(text)


def test_parse_error_reports_line_number():
    with pytest.raises(SystemParseError) as info:
        parse_system("# header\nalphabet p q\nwffs p q\n\nrule p -> x\n")
    assert info.value.line == 5


def test_comments_and_empty_premises_parse():
    system = parse_system("alphabet a b  # symbols\nwffs a b\nrule -> a\nrule a -> b\n")
    assert Rule([], ["a"]) in system.rules


@pytest.mark.parametrize("make", [
    lambda ex1: ex1,
    lambda ex1: generate_pa_mi(3),
    lambda ex1: ex1.with_axioms([]),
])
def test_round_trip(ex1, make):
    system = make(ex1)
    text = serialize_system(system)
    assert parse_system(text) == system
    assert serialize_system(parse_system(text)) == text


def test_round_trip_without_axioms_has_no_axiom_lines(ex1):
    assert "axiom" not in serialize_system(ex1.with_axioms([]))


def test_validate(ex1):
    assert validate_system(ex1) == []
    bad_rule = DeductionSystem(ex1.alphabet, ex1.wffs, ex1.rules | {Rule(["p"], ["x"])}, ex1.axioms)
    assert len(validate_system(bad_rule)) == 1
    empty = DeductionSystem(ex1.alphabet, [], [], [])
    assert len(validate_system(empty)) == 1


# -- operator laws on random systems ------------------------------------------

systems = st.integers(0, 10**6).map(lambda seed: random_system(random.Random(seed)))


@st.composite
def system_and_sets(draw, count=2):
    system = draw(systems)
    universe = sorted(system.wffs)
    sets = [frozenset(draw(st.lists(st.sampled_from(universe), unique=True)))
            for _ in range(count)]
    return system, sets


@settings(max_examples=150, deadline=None)
@given(system_and_sets())
def test_monotone(data):
    system, (s, extra) = data
    assert apply_deduction(system, s) <= apply_deduction(system, s | extra)


@settings(max_examples=100, deadline=None)
@given(system_and_sets(count=1))
def test_finitely_generated(data):
    system, (s,) = data
    subsets = oracles.powerset(s)
    assert frozenset().union(*(apply_deduction(system, f) for f in subsets)) == apply_deduction(system, s)


@settings(max_examples=100, deadline=None)
@given(system_and_sets(count=3))
def test_union_subadditive_and_chain_union(data):
    system, family = data
    images = frozenset().union(*(apply_deduction(system, f) for f in family))
    assert images <= apply_deduction(system, frozenset().union(*family))
    chain = list(itertools.accumulate(family, frozenset.union))
    assert frozenset().union(*(apply_deduction(system, c) for c in chain)) == \
        apply_deduction(system, chain[-1])


@settings(max_examples=100, deadline=None)
@given(systems)
def test_apply_matches_naive_firing(system):
    rng = random.Random(len(system.rules))
    for _ in range(10):
        s = frozenset(f for f in system.wffs if rng.random() < 0.5)
        assert apply_deduction(system, s) == oracles.fire(system, s)


@settings(max_examples=100, deadline=None)
@given(systems)
def test_parse_serialize_identity(system):
    assert parse_system(serialize_system(system)) == system
