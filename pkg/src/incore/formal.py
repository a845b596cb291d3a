"""Formulas, ground rules and deduction systems.

A deduction operator is given extensionally by ground rule instances
``premises -> conclusions``.  One application fires every rule whose
premises are contained in the input set; the input itself is *not* carried
over, so the operator need not be inflationary.

The textual format is line based::

    alphabet p q r s t
    wffs p q r s t
    axiom p
    rule p -> q
    rule -> p          # empty premise side
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import DomainError, InvalidSystemError, SystemParseError

FormulaSet = frozenset[str]


def canonical(formulas: Iterable[str]) -> list[str]:
    """Formulas in canonical (lexicographic) order."""
    return sorted(formulas)


def formula_length(formula: str) -> int:
    """Number of alphabet symbols in ``formula``, repetitions counted."""
    return len(formula)


def total_length(formulas: Iterable[str]) -> int:
    return sum(len(f) for f in formulas)


@dataclass(frozen=True)
class Rule:
    premises: FormulaSet
    conclusions: FormulaSet

    def __init__(self, premises: Iterable[str], conclusions: Iterable[str]):
        object.__setattr__(self, "premises", frozenset(premises))
        object.__setattr__(self, "conclusions", frozenset(conclusions))

    def sort_key(self):
        return (len(self.premises), canonical(self.premises), canonical(self.conclusions))

    def __str__(self) -> str:
        lhs = " ".join(canonical(self.premises))
        rhs = " ".join(canonical(self.conclusions))
        return f"{lhs} -> {rhs}" if lhs else f"-> {rhs}"


@dataclass(frozen=True)
class DeductionSystem:
    """Alphabet, finite set W of well-formed formulas, ground rules, axioms.

    Construction does not validate; use :func:`validate_system` or
    :meth:`checked` when the input is untrusted.
    """

    alphabet: tuple[str, ...]
    wffs: FormulaSet
    rules: frozenset[Rule]
    axioms: FormulaSet

    def __init__(self, alphabet: Iterable[str], wffs: Iterable[str],
                 rules: Iterable[Rule], axioms: Iterable[str] = ()):
        object.__setattr__(self, "alphabet", tuple(alphabet))
        object.__setattr__(self, "wffs", frozenset(wffs))
        object.__setattr__(self, "rules", frozenset(rules))
        object.__setattr__(self, "axioms", frozenset(axioms))

    def checked(self) -> "DeductionSystem":
        problems = validate_system(self)
        if problems:
            raise InvalidSystemError(problems)
        return self

    def with_axioms(self, axioms: Iterable[str]) -> "DeductionSystem":
        return DeductionSystem(self.alphabet, self.wffs, self.rules, axioms)

    @cached_property
    def sorted_rules(self) -> list[Rule]:
        return sorted(self.rules, key=Rule.sort_key)

    @cached_property
    def _unconditional(self) -> FormulaSet:
        return frozenset().union(*(r.conclusions for r in self.rules if not r.premises))

    @cached_property
    def _by_premise(self) -> dict[str, list[Rule]]:
        # Each conditional rule is indexed under its smallest premise only.
        index: dict[str, list[Rule]] = {}
        for rule in self.sorted_rules:
            if rule.premises:
                index.setdefault(min(rule.premises), []).append(rule)
        return index

    @cached_property
    def producers(self) -> dict[str, list[Rule]]:
        """Rules grouped by each formula they conclude."""
        out: dict[str, list[Rule]] = {}
        for rule in self.sorted_rules:
            for c in rule.conclusions:
                out.setdefault(c, []).append(rule)
        return out

    def step(self, s: FormulaSet) -> FormulaSet:
        """One application of D without domain checks."""
        out = set(self._unconditional)
        for f in s:
            for rule in self._by_premise.get(f, ()):
                if rule.premises <= s:
                    out.update(rule.conclusions)
        return frozenset(out)

    def require_wffs(self, formulas: Iterable[str]) -> FormulaSet:
        fs = frozenset(formulas)
        stray = fs - self.wffs
        if stray:
            raise DomainError(f"not well-formed formulas of this system: {canonical(stray)}")
        return fs


def apply_deduction(system: DeductionSystem, s: Iterable[str]) -> FormulaSet:
    """D(S): union of conclusions of all rules whose premises lie in S."""
    return system.step(system.require_wffs(s))


def validate_system(system: DeductionSystem) -> list[str]:
    """Every invariant violation of ``system``; empty means valid."""
    problems = []
    symbols = system.alphabet
    if not symbols:
        problems.append("alphabet is empty")
    if len(set(symbols)) != len(symbols):
        problems.append("alphabet symbols are not distinct")
    for sym in symbols:
        if len(sym) != 1 or sym.isspace() or sym == "#":
            problems.append(f"invalid alphabet symbol {sym!r}")
    allowed = set(symbols)
    if not system.wffs:
        problems.append("set of well-formed formulas is empty")
    for f in canonical(system.wffs):
        if not f:
            problems.append("empty formula in wffs")
        bad = sorted(set(f) - allowed)
        if bad:
            problems.append(f"formula {f!r} uses symbols outside the alphabet: {bad}")
    for a in canonical(system.axioms - system.wffs):
        problems.append(f"axiom not a declared wff: {a!r}")
    for rule in system.sorted_rules:
        if not rule.conclusions:
            problems.append(f"rule with no conclusions: {rule}")
        for f in canonical((rule.premises | rule.conclusions) - system.wffs):
            problems.append(f"rule formula not a declared wff: {f!r} in {rule}")
    return problems


def _check_formula(f: str, allowed: set[str], lineno: int) -> None:
    for ch in f:
        if ch not in allowed:
            raise SystemParseError(f"symbol {ch!r} in formula {f!r} is not in the alphabet", lineno)


def parse_system(text: str) -> DeductionSystem:
    """Parse the line-based system format and validate the result."""
    alphabet: list[str] | None = None
    wffs: list[str] = []
    axioms: list[tuple[str, int]] = []
    rules: list[tuple[list[str], list[str], int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        directive, *args = line.split()
        if directive == "alphabet":
            if alphabet is not None:
                raise SystemParseError("alphabet declared twice", lineno)
            if not args:
                raise SystemParseError("alphabet needs at least one symbol", lineno)
            for sym in args:
                if len(sym) != 1:
                    raise SystemParseError(f"alphabet symbol {sym!r} is not a single character", lineno)
            if len(set(args)) != len(args):
                raise SystemParseError("duplicate alphabet symbol", lineno)
            alphabet = args
        elif directive == "wffs":
            if alphabet is None:
                raise SystemParseError("wffs before alphabet", lineno)
            for f in args:
                _check_formula(f, set(alphabet), lineno)
                if f in wffs:
                    raise SystemParseError(f"duplicate wff {f!r}", lineno)
                wffs.append(f)
        elif directive == "axiom":
            if len(args) != 1:
                raise SystemParseError("axiom takes exactly one formula", lineno)
            axioms.append((args[0], lineno))
        elif directive == "rule":
            if args.count("->") != 1:
                raise SystemParseError("rule needs exactly one '->'", lineno)
            cut = args.index("->")
            lhs, rhs = args[:cut], args[cut + 1:]
            if not rhs:
                raise SystemParseError("rule has no conclusions", lineno)
            rules.append((lhs, rhs, lineno))
        else:
            raise SystemParseError(f"unknown directive {directive!r}", lineno)

    if alphabet is None:
        raise SystemParseError("missing alphabet declaration")
    if not wffs:
        raise SystemParseError("missing wffs declaration")
    allowed, declared = set(alphabet), set(wffs)
    for f, lineno in axioms:
        _check_formula(f, allowed, lineno)
        if f not in declared:
            raise SystemParseError(f"axiom not a declared wff: {f!r}", lineno)
    built = []
    for lhs, rhs, lineno in rules:
        for f in lhs + rhs:
            _check_formula(f, allowed, lineno)
            if f not in declared:
                raise SystemParseError(f"rule formula not a declared wff: {f!r}", lineno)
        built.append(Rule(lhs, rhs))
    return DeductionSystem(alphabet, wffs, built, [a for a, _ in axioms]).checked()


def serialize_system(system: DeductionSystem) -> str:
    """Canonical text form; ``parse_system`` inverts it."""
    lines = [
        "alphabet " + " ".join(system.alphabet),
        "wffs " + " ".join(canonical(system.wffs)),
    ]
    lines += [f"axiom {a}" for a in canonical(system.axioms)]
    lines += [f"rule {rule}" for rule in system.sorted_rules]
    return "\n".join(lines) + "\n"
