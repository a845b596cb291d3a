"""Consistent core, kappa threshold and the safety classification.

A sentence of T(A) is *core* when some axiom subset B derives it while
T(B) is still a proper subset of W.  By monotonicity of D this is the same
as asking for a support sequence, at any depth, whose bottom level has a
consistent theory.  Kappa is the lexicographically smallest index among
non-core sentences of depth >= 1; every indexed sentence strictly below it
is core.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .closure import ClosureTrace, closure_trace, depth_of
from .derivation import DEFAULT_BUDGET, Index, iter_indices
from .errors import (DomainError, NoIndexError, NotAKappaWitnessError,
                     NotDerivableError, SoundnessError)
from .formal import DeductionSystem, FormulaSet, canonical


@dataclass(frozen=True)
class CoreVerdict:
    sentence: str
    core: bool
    witness: FormulaSet | None = None
    via_theorem: bool = False
    is_axiom: bool = False

    @property
    def status(self) -> str:
        return "core" if self.core else "non-core"

    def to_dict(self) -> dict:
        return {
            "sentence": self.sentence,
            "status": self.status,
            "witness": canonical(self.witness) if self.witness is not None else None,
            "via_theorem": self.via_theorem,
            "axiom": self.is_axiom,
        }


@dataclass(frozen=True)
class KappaResult:
    value: Index | None
    witness: str | None = None
    # Non-core axioms have no index and are kept out of the minimisation.
    non_core_axioms: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "value": self.value.to_dict() if self.value else None,
            "witness": self.witness,
            "non_core_axioms": list(self.non_core_axioms),
        }


def below_kappa(index: Index, kappa: Index | None) -> bool:
    """``index < kappa`` lexicographically; a missing kappa exceeds every index."""
    return kappa is None or index < kappa


class _AxiomSubsets:
    """Theories of axiom subsets, visited smallest first and cached."""

    def __init__(self, system: DeductionSystem):
        self.system = system
        self._theories: list[tuple[FormulaSet, FormulaSet]] = []
        self._source = self._generate()

    def _generate(self) -> Iterator[tuple[FormulaSet, FormulaSet]]:
        axioms = canonical(self.system.axioms)
        for k in range(len(axioms) + 1):
            for subset in combinations(axioms, k):
                b = frozenset(subset)
                yield b, closure_trace(self.system, b).union

    def __iter__(self) -> Iterator[tuple[FormulaSet, FormulaSet]]:
        yield from self._theories
        for item in self._source:
            self._theories.append(item)
            yield item

    def smallest_witness(self, formula: str) -> FormulaSet | None:
        for b, theory in self:
            if formula in theory and theory != self.system.wffs:
                return b
        return None


class _Analysis:
    """Shared state for the whole-system reports."""

    def __init__(self, system: DeductionSystem):
        self.system = system
        self.trace: ClosureTrace = closure_trace(system, system.axioms)
        self.theory = self.trace.union
        self.inconsistent = self.theory == system.wffs
        self.subsets = _AxiomSubsets(system)

    def require_derivable(self, formula: str) -> None:
        if formula not in self.system.wffs:
            raise DomainError(f"{formula!r} is not a well-formed formula of this system")
        if formula not in self.theory:
            raise NotDerivableError(f"{formula!r} is not derivable from the axioms")

    def verdict(self, formula: str) -> CoreVerdict:
        self.require_derivable(formula)
        is_axiom = formula in self.system.axioms
        if not self.inconsistent:
            return CoreVerdict(formula, True, self.system.axioms, is_axiom=is_axiom)
        witness = self.subsets.smallest_witness(formula)
        return CoreVerdict(formula, witness is not None, witness, is_axiom=is_axiom)

    def verdicts(self) -> list[CoreVerdict]:
        return [self.verdict(f) for f in canonical(self.theory)]

    def kappa(self, verdicts: list[CoreVerdict], budget: int) -> KappaResult:
        non_core = [v.sentence for v in verdicts if not v.core]
        depths = {f: depth_of(self.system, f, self.trace) for f in non_core}
        axioms = tuple(f for f in non_core if depths[f] == 0)
        indexed = [f for f in non_core if depths[f] > 0]
        if not indexed:
            return KappaResult(None, None, axioms)
        # Lexicographic minimum: only the shallowest sentences can attain it.
        shallowest = min(depths[f] for f in indexed)
        candidates = [f for f in indexed if depths[f] == shallowest]
        best = min((idx, f) for f, idx in iter_indices(self.system, candidates, budget))
        return KappaResult(best[0], best[1], axioms)

    def sigma_min_depth_core(self, formula: str) -> bool:
        """Core membership when supports are restricted to the minimal depth.

        The greatest support sequence over a bottom level B has levels
        T_i(B), so a consistent-bottom support at depth n exists iff some B
        with consistent theory has the formula in T_n(B).
        """
        n = depth_of(self.system, formula, self.trace)
        for b, theory in self.subsets:
            if theory != self.system.wffs and formula in closure_trace(self.system, b).state(n):
                return True
        return False


def core_membership(system: DeductionSystem, formula: str) -> CoreVerdict:
    """Core status of one derivable sentence with its smallest witness subset.

    When the whole axiom set is consistent the witness is the axiom set itself.
    """
    return _Analysis(system).verdict(formula)


def consistent_core(system: DeductionSystem) -> list[CoreVerdict]:
    """One verdict per sentence of T(A), in canonical order."""
    return _Analysis(system).verdicts()


def kappa(system: DeductionSystem, budget: int = DEFAULT_BUDGET) -> KappaResult:
    analysis = _Analysis(system)
    return analysis.kappa(analysis.verdicts(), budget)


def kappa_upper_bound(system: DeductionSystem, formula: str,
                      budget: int = DEFAULT_BUDGET) -> Index:
    """Index of a single non-core sentence; kappa can only be smaller."""
    analysis = _Analysis(system)
    verdict = analysis.verdict(formula)
    if verdict.core:
        raise NotAKappaWitnessError(f"{formula!r} is core; not a valid kappa witness")
    if depth_of(system, formula, analysis.trace) == 0:
        raise NoIndexError(f"{formula!r} is an axiom and has no index")
    [(_, index)] = iter_indices(system, [formula], budget)
    return index


@dataclass
class ClassificationRow:
    sentence: str
    depth: int
    index: Index | None
    verdict: CoreVerdict
    min_depth_sigma_core: bool

    @property
    def note(self) -> str:
        if self.index is None:
            return "axiom" if self.verdict.core else "non-core axiom"
        if self.verdict.via_theorem:
            return "safe by theorem"
        return "core by witness" if self.verdict.core else "non-core"

    def to_dict(self) -> dict:
        return {
            "sentence": self.sentence,
            "depth": self.depth,
            "index": self.index.to_dict() if self.index else None,
            "status": self.verdict.status,
            "witness": self.verdict.to_dict()["witness"],
            "via_theorem": self.verdict.via_theorem,
            "min_depth_sigma_core": self.min_depth_sigma_core,
            "note": self.note,
        }


@dataclass
class Classification:
    inconsistent: bool
    kappa: KappaResult
    rows: list[ClassificationRow] = field(default_factory=list)

    @property
    def core(self) -> list[str]:
        return [r.sentence for r in self.rows if r.verdict.core]

    def to_dict(self) -> dict:
        return {
            "inconsistent": self.inconsistent,
            "kappa": self.kappa.to_dict(),
            "core": self.core,
            "rows": [r.to_dict() for r in self.rows],
        }


def classify(system: DeductionSystem, budget: int = DEFAULT_BUDGET) -> Classification:
    """Index, core status and theorem-backed safety of every sentence of T(A).

    Raises :class:`SoundnessError` if a sentence below kappa is not core.
    """
    analysis = _Analysis(system)
    verdicts = analysis.verdicts()
    kap = analysis.kappa(verdicts, budget)
    indices = dict(iter_indices(system, [v.sentence for v in verdicts], budget))
    rows = []
    for v in verdicts:
        index = indices[v.sentence]
        safe = index is not None and below_kappa(index, kap.value)
        if safe and not v.core:
            raise SoundnessError(
                f"{v.sentence!r} has index {index} below kappa {kap.value} but is not core")
        if safe:
            v = CoreVerdict(v.sentence, True, v.witness, True, v.is_axiom)
        rows.append(ClassificationRow(
            v.sentence, depth_of(system, v.sentence, analysis.trace), index, v,
            analysis.sigma_min_depth_core(v.sentence)))
    return Classification(analysis.inconsistent, kap, rows)


@dataclass
class EquivalenceRow:
    sentence: str
    index_a: Index | None
    index_b: Index | None

    @property
    def changed(self) -> bool:
        return self.index_a != self.index_b

    def to_dict(self) -> dict:
        def fmt(idx):
            return idx.to_dict() if idx else "axiom"
        return {"sentence": self.sentence, "index_a": fmt(self.index_a),
                "index_b": fmt(self.index_b), "changed": self.changed}


@dataclass
class EquivalenceReport:
    equivalent: bool
    theory_a: FormulaSet
    theory_b: FormulaSet
    kappa_a: KappaResult | None = None
    kappa_b: KappaResult | None = None
    rows: list[EquivalenceRow] = field(default_factory=list)

    @property
    def changed(self) -> int:
        return sum(r.changed for r in self.rows)

    def to_dict(self) -> dict:
        return {
            "equivalent": self.equivalent,
            "theory_a": canonical(self.theory_a),
            "theory_b": canonical(self.theory_b),
            "kappa_a": self.kappa_a.to_dict() if self.kappa_a else None,
            "kappa_b": self.kappa_b.to_dict() if self.kappa_b else None,
            "changed": self.changed,
            "rows": [r.to_dict() for r in self.rows],
        }


def compare_axiomatizations(system_a: DeductionSystem, system_b: DeductionSystem,
                            budget: int = DEFAULT_BUDGET) -> EquivalenceReport:
    """Whether two axiom sets over the same W and rules have the same theory.

    For equivalent axiomatizations the index of every sentence that is
    derived (depth >= 1) under either one is tabulated side by side, with
    both kappa values.
    """
    if (system_a.alphabet != system_b.alphabet or system_a.wffs != system_b.wffs
            or system_a.rules != system_b.rules):
        raise DomainError("axiomatizations must share alphabet, wffs and rules")
    a, b = _Analysis(system_a), _Analysis(system_b)
    if a.theory != b.theory:
        return EquivalenceReport(False, a.theory, b.theory)
    sentences = canonical(a.theory)
    idx_a = dict(iter_indices(system_a, sentences, budget))
    idx_b = dict(iter_indices(system_b, sentences, budget))
    rows = [EquivalenceRow(f, idx_a[f], idx_b[f]) for f in sentences
            if idx_a[f] is not None or idx_b[f] is not None]
    return EquivalenceReport(True, a.theory, b.theory,
                             a.kappa(a.verdicts(), budget), b.kappa(b.verdicts(), budget), rows)
