"""Exception hierarchy shared by every analysis module."""


class IncoreError(Exception):
    """Base class for all library errors."""


class DomainError(IncoreError, ValueError):
    """A formula or formula set lies outside the system's well-formed formulas."""


class SystemParseError(IncoreError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}" if line is not None else message)


class InvalidSystemError(IncoreError, ValueError):
    def __init__(self, problems: list[str]):
        self.problems = problems
        super().__init__("; ".join(problems))


class NotDerivableError(IncoreError):
    """The sentence is not a member of T(A)."""


class NoIndexError(IncoreError):
    """Axioms (derivation depth 0) carry no index."""


class BudgetExceededError(IncoreError):
    def __init__(self, budget: int, partial=None):
        self.budget = budget
        # Whatever was found before the budget ran out; never a complete answer.
        self.partial = partial
        super().__init__(f"enumeration exceeded node budget of {budget}")


class NotAKappaWitnessError(IncoreError):
    """The sentence is core, so its index says nothing about kappa."""


class SoundnessError(IncoreError):
    """A sentence below kappa was found outside the consistent core."""


class ExpressionError(IncoreError, ValueError):
    """Malformed arithmetic expression."""
