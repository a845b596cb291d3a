"""Support sequences and the index (depth, minimal support length).

A support sequence for P at depth n is a tuple ``(S_{n-1}, ..., S_0)`` of
finite sets with P in D(S_{n-1}), S_i contained in D(S_{i-1}), S_0 contained
in the axioms and every S_i contained in T_i(A).  The support length of a
sequence is the summed length of the distinct formulas in the union of its
levels; a formula occurring on two levels is counted once.

Search is top-down.  Below a target set X only subsets of T_i whose image
covers X can continue the sequence, and every such subset contains a cover
built by choosing one producing rule per target formula.  The minimum
search walks those rule-choice covers with a best-so-far cost bound; a
cover that is not inclusion-minimal is never cheaper than the minimal one
inside it, so nothing optimal is lost.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .closure import ClosureTrace, closure_trace, depth_of
from .errors import BudgetExceededError, NoIndexError, NotDerivableError
from .formal import DeductionSystem, FormulaSet, canonical, total_length

DEFAULT_BUDGET = 1_000_000

DerivationSequence = tuple[FormulaSet, ...]


@dataclass(frozen=True, order=True)
class Index:
    depth: int
    support_length: int

    def to_dict(self) -> dict:
        return {"depth": self.depth, "support_length": self.support_length}

    def __str__(self) -> str:
        return f"({self.depth},{self.support_length})"


def sequence_to_json(seq: DerivationSequence) -> list[list[str]]:
    return [canonical(level) for level in seq]


def support_length(seq: DerivationSequence) -> int:
    return total_length(frozenset().union(*seq))


def sequence_problems(system: DeductionSystem, seq: DerivationSequence, formula: str,
                      trace: ClosureTrace | None = None) -> list[str]:
    """Reasons ``seq`` is not a support sequence for ``formula``; empty if it is."""
    if not seq:
        return ["sequence has no levels (depth must be at least 1)"]
    problems = []
    trace = trace or closure_trace(system, system.axioms)
    n = len(seq)
    levels = [frozenset(s) for s in reversed(seq)]  # levels[i] is S_i
    for i, level in enumerate(levels):
        stray = level - system.wffs
        if stray:
            problems.append(f"S_{i} contains non-wffs {canonical(stray)}")
            return problems
    if formula not in system.step(levels[n - 1]):
        problems.append(f"{formula!r} is not in D(S_{n - 1})")
    for i in range(1, n):
        missing = levels[i] - system.step(levels[i - 1])
        if missing:
            problems.append(f"S_{i} not contained in D(S_{i - 1}): missing {canonical(missing)}")
    if not levels[0] <= system.axioms:
        problems.append(f"S_0 not contained in the axioms: {canonical(levels[0] - system.axioms)}")
    for i, level in enumerate(levels):
        outside = level - trace.state(i)
        if outside:
            problems.append(f"S_{i} not contained in T_{i}(A): {canonical(outside)}")
    return problems


def verify_sequence(system: DeductionSystem, seq: DerivationSequence, formula: str) -> bool:
    return not sequence_problems(system, seq, formula)


class _Budget:
    def __init__(self, limit: int, partial: list | None = None):
        self.limit = limit
        self.used = 0
        self.partial = partial

    def tick(self) -> None:
        self.used += 1
        if self.used > self.limit:
            partial = list(self.partial) if self.partial is not None else None
            raise BudgetExceededError(self.limit, partial)


def _minimal_covers(system: DeductionSystem, target: FormulaSet, pool: FormulaSet,
                    budget: _Budget) -> list[FormulaSet]:
    """Inclusion-minimal subsets of ``pool`` whose image contains ``target``."""
    targets = canonical(target)
    found: set[FormulaSet] = set()

    def go(i: int, chosen: FormulaSet) -> None:
        budget.tick()
        image = system.step(chosen)
        while i < len(targets) and targets[i] in image:
            i += 1
        if i == len(targets):
            found.add(chosen)
            return
        for rule in system.producers.get(targets[i], ()):
            if rule.premises <= pool:
                go(i + 1, chosen | rule.premises)

    go(0, frozenset())
    minimal: list[FormulaSet] = []
    for cover in sorted(found, key=lambda c: (len(c), canonical(c))):
        if not any(m <= cover for m in minimal):
            minimal.append(cover)
    return minimal


def _all_covers(system: DeductionSystem, target: FormulaSet, pool: FormulaSet,
                budget: _Budget) -> list[FormulaSet]:
    """Every subset of ``pool`` whose image contains ``target``."""
    out: set[FormulaSet] = set()
    for cover in _minimal_covers(system, target, pool, budget):
        spare = canonical(pool - cover)
        for k in range(len(spare) + 1):
            for extra in combinations(spare, k):
                budget.tick()
                out.add(cover.union(extra))
    return sorted(out, key=lambda c: (len(c), canonical(c)))


def _depths_for(system: DeductionSystem, formula: str, trace: ClosureTrace,
                policy: str, bound: int | None) -> list[int]:
    n = depth_of(system, formula, trace)
    if policy == "minimal":
        if n == 0:
            raise NoIndexError(f"{formula!r} is an axiom and has no index")
        return [n]
    if policy != "all":
        raise ValueError(f"unknown depth policy {policy!r}")
    if bound is None:
        bound = len(trace.states) - 1 + trace.period
    return [d for d in range(1, bound + 1) if formula in trace.state(d)]


def enumerate_supports(system: DeductionSystem, formula: str, policy: str = "minimal",
                       bound: int | None = None, budget: int = DEFAULT_BUDGET
                       ) -> list[DerivationSequence]:
    """All support sequences for ``formula``.

    ``policy="minimal"`` enumerates at the minimal derivation depth only;
    ``policy="all"`` at every depth 1..bound where the formula is in T_n(A).
    Exceeding ``budget`` raises :class:`BudgetExceededError` carrying the
    sequences found so far.
    """
    trace = closure_trace(system, system.axioms)
    depths = _depths_for(system, formula, trace, policy, bound)
    found: list[DerivationSequence] = []
    meter = _Budget(budget, found)

    def extend(i: int, target: FormulaSet, prefix: tuple[FormulaSet, ...]) -> None:
        for cover in _all_covers(system, target, trace.state(i), meter):
            meter.tick()
            seq = prefix + (cover,)
            if i == 0:
                found.append(seq)
            else:
                extend(i - 1, cover, seq)

    for n in depths:
        extend(n - 1, frozenset([formula]), ())
    found.sort(key=lambda s: (len(s), support_length(s), [canonical(x) for x in s]))
    return found


def _best_support(system: DeductionSystem, formula: str, n: int, trace: ClosureTrace,
                  meter: _Budget) -> tuple[int, DerivationSequence]:
    best_cost = float("inf")
    best_seq: DerivationSequence = ()

    def level(i: int, target: FormulaSet, used: FormulaSet, prefix: tuple) -> None:
        nonlocal best_cost, best_seq
        pool = trace.state(i)
        targets = canonical(target)
        explored: set[FormulaSet] = set()

        def choose(j: int, chosen: FormulaSet) -> None:
            nonlocal best_cost, best_seq
            meter.tick()
            cost = total_length(used | chosen)
            if cost >= best_cost:
                return
            image = system.step(chosen)
            while j < len(targets) and targets[j] in image:
                j += 1
            if j == len(targets):
                if chosen in explored:
                    return
                explored.add(chosen)
                if i == 0:
                    best_cost, best_seq = cost, prefix + (chosen,)
                else:
                    level(i - 1, chosen, used | chosen, prefix + (chosen,))
                return
            options = [r.premises for r in system.producers.get(targets[j], ())
                       if r.premises <= pool]
            options.sort(key=lambda p: (total_length(p - used - chosen), canonical(p)))
            for premises in options:
                choose(j + 1, chosen | premises)

        choose(0, frozenset())

    level(n - 1, frozenset([formula]), frozenset(), ())
    if not best_seq:
        raise AssertionError("formula in T_n(A) must have a support sequence at depth n")
    return int(best_cost), best_seq


def min_support(system: DeductionSystem, formula: str, depth: int | None = None,
                budget: int = DEFAULT_BUDGET) -> tuple[int, DerivationSequence]:
    """Minimal support length and a sequence attaining it.

    ``depth`` defaults to the minimal derivation depth of ``formula``; any
    other depth n >= 1 with the formula in T_n(A) may be requested.
    """
    trace = closure_trace(system, system.axioms)
    n_min = depth_of(system, formula, trace)
    if depth is None:
        if n_min == 0:
            raise NoIndexError(f"{formula!r} is an axiom and has no index")
        depth = n_min
    elif depth < 1 or formula not in trace.state(depth):
        raise NotDerivableError(f"{formula!r} is not in T_{depth}(A)")
    return _best_support(system, formula, depth, trace, _Budget(budget))


def min_support_length(system: DeductionSystem, formula: str, depth: int | None = None,
                       budget: int = DEFAULT_BUDGET) -> int:
    return min_support(system, formula, depth, budget)[0]


def min_support_length_any_depth(system: DeductionSystem, formula: str,
                                 bound: int | None = None,
                                 budget: int = DEFAULT_BUDGET) -> tuple[int, int]:
    """Smallest support length over every depth up to ``bound``, and that depth."""
    trace = closure_trace(system, system.axioms)
    depths = _depths_for(system, formula, trace, "all", bound)
    if not depths:
        raise NoIndexError(f"{formula!r} is never derived at a depth >= 1")
    return min((min_support_length(system, formula, d, budget), d) for d in depths)


def index_of(system: DeductionSystem, formula: str, budget: int = DEFAULT_BUDGET) -> Index:
    trace = closure_trace(system, system.axioms)
    n = depth_of(system, formula, trace)
    if n == 0:
        raise NoIndexError(f"{formula!r} is an axiom and has no index")
    m, _ = _best_support(system, formula, n, trace, _Budget(budget))
    return Index(n, m)


def iter_indices(system: DeductionSystem, formulas, budget: int = DEFAULT_BUDGET
                 ) -> Iterator[tuple[str, Index | None]]:
    """Index of each formula, ``None`` for axioms; shares one closure trace."""
    trace = closure_trace(system, system.axioms)
    for f in formulas:
        n = depth_of(system, f, trace)
        if n == 0:
            yield f, None
        else:
            yield f, Index(n, _best_support(system, f, n, trace, _Budget(budget))[0])
