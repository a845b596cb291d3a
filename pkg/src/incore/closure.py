"""Iterated theory construction T_0 = base, T_{n+1} = D(T_n).

D is not assumed inflationary, so the state sequence need not grow; it is
iterated until some state recurs.  Because there are finitely many subsets
of W the sequence is eventually periodic, and the prefix up to the first
recurrence already contains every state that will ever occur.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .errors import DomainError, NotDerivableError
from .formal import DeductionSystem, FormulaSet, canonical


@dataclass(frozen=True)
class ClosureTrace:
    """States T_0..T_L where T_L is the first repeat of an earlier T_k."""

    states: tuple[FormulaSet, ...]
    recurs_at: int  # k: first index of the state that recurs
    union: FormulaSet

    @property
    def period(self) -> int:
        return len(self.states) - 1 - self.recurs_at

    @property
    def is_fixpoint(self) -> bool:
        return self.period == 1

    def state(self, n: int) -> FormulaSet:
        """T_n for any n >= 0, unrolling the cycle as needed."""
        last = len(self.states) - 1
        if n < last:
            return self.states[n]
        return self.states[self.recurs_at + (n - self.recurs_at) % self.period]

    def to_dict(self) -> dict:
        return {
            "states": [canonical(s) for s in self.states],
            "termination": {
                "kind": "fixpoint" if self.is_fixpoint else "cycle",
                "step": self.recurs_at,
                "period": self.period,
            },
            "union": canonical(self.union),
        }


def closure_trace(system: DeductionSystem, base: Iterable[str]) -> ClosureTrace:
    current = system.require_wffs(base)
    seen: dict[FormulaSet, int] = {}
    states: list[FormulaSet] = []
    while current not in seen:
        seen[current] = len(states)
        states.append(current)
        current = system.step(current)
    states.append(current)
    return ClosureTrace(tuple(states), seen[current], frozenset().union(*states))


def theory_of(system: DeductionSystem, base: Iterable[str]) -> FormulaSet:
    return closure_trace(system, base).union


def is_inconsistent(system: DeductionSystem, base: Iterable[str] | None = None) -> bool:
    """True iff T(base) = W.  ``base`` defaults to the axioms."""
    return theory_of(system, system.axioms if base is None else base) == system.wffs


def depth_of(system: DeductionSystem, formula: str, trace: ClosureTrace | None = None) -> int:
    """Smallest n with ``formula`` in T_n(A)."""
    if formula not in system.wffs:
        raise DomainError(f"{formula!r} is not a well-formed formula of this system")
    trace = trace or closure_trace(system, system.axioms)
    for n, state in enumerate(trace.states):
        if formula in state:
            return n
    raise NotDerivableError(f"{formula!r} is not derivable from the axioms")


# ---------------------------------------------------------------------------
# Operator laws

LAWS = ("finite_generation", "monotonicity", "union_subadditivity", "directed_union")
EXHAUSTIVE_FG_LIMIT = 6


@dataclass
class LawResult:
    law: str
    checked: int = 0
    violations: int = 0
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def to_dict(self) -> dict:
        return {"law": self.law, "checked": self.checked, "violations": self.violations,
                "passed": self.passed, "counterexamples": self.counterexamples}


@dataclass
class LawReport:
    seed: int
    samples: int
    results: dict[str, LawResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results.values())

    def to_dict(self) -> dict:
        return {"seed": self.seed, "samples": self.samples, "passed": self.passed,
                "laws": [self.results[name].to_dict() for name in LAWS]}


def _random_subset(rng: random.Random, universe: list[str]) -> FormulaSet:
    return frozenset(f for f in universe if rng.random() < 0.5)


def _random_chain(rng: random.Random, universe: list[str], length: int) -> list[FormulaSet]:
    chain = [_random_subset(rng, universe)]
    for _ in range(length - 1):
        chain.append(chain[-1] | _random_subset(rng, universe))
    return chain


def check_operator_laws(
    system: DeductionSystem,
    samples: int = 100,
    seed: int = 0,
    operator: Callable[[FormulaSet], FormulaSet] | None = None,
    max_counterexamples: int = 5,
) -> LawReport:
    """Sample-check the four structural laws of a finitely generated operator.

    ``operator`` defaults to the system's own D; tests pass deliberately broken
    operators here to make sure violations are caught.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    op = operator or system.step
    rng = random.Random(seed)
    universe = canonical(system.wffs)
    results = {name: LawResult(name) for name in LAWS}

    def record(name: str, **detail) -> None:
        res = results[name]
        res.violations += 1
        if len(res.counterexamples) < max_counterexamples:
            res.counterexamples.append({k: canonical(v) for k, v in detail.items()})

    for _ in range(samples):
        # D(S) equals the union of D(F) over finite F within S.
        s = _random_subset(rng, universe)
        if len(s) <= EXHAUSTIVE_FG_LIMIT:
            parts = [frozenset(c) for k in range(len(s) + 1)
                     for c in itertools.combinations(canonical(s), k)]
        else:
            members = canonical(s)
            parts = [frozenset(rng.sample(members, rng.randint(0, len(members))))
                     for _ in range(64)]
            parts.append(s)
        image = op(s)
        combined = frozenset().union(*(op(f) for f in parts))
        results["finite_generation"].checked += 1
        if combined != image:
            record("finite_generation", S=s, D_S=image, union_of_parts=combined)

        small = _random_subset(rng, universe)
        big = small | _random_subset(rng, universe)
        results["monotonicity"].checked += 1
        if not op(small) <= op(big):
            record("monotonicity", S=small, S_prime=big, D_S=op(small), D_S_prime=op(big))

        family = [_random_subset(rng, universe) for _ in range(rng.randint(2, 4))]
        lhs = frozenset().union(*(op(f) for f in family))
        rhs = op(frozenset().union(*family))
        results["union_subadditivity"].checked += 1
        if not lhs <= rhs:
            record("union_subadditivity", union_of_images=lhs, image_of_union=rhs)

        # A finite directed family always has a largest member; a chain is the
        # simplest such family.
        chain = _random_chain(rng, universe, rng.randint(2, 4))
        lhs = frozenset().union(*(op(c) for c in chain))
        rhs = op(chain[-1])
        results["directed_union"].checked += 1
        if lhs != rhs:
            record("directed_union", union_of_images=lhs, image_of_top=rhs)

    return LawReport(seed, samples, results)
