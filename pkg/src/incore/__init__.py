"""Safe reasoning inside inconsistent finite deduction systems."""

from .closure import (ClosureTrace, check_operator_laws, closure_trace, depth_of,
                      is_inconsistent, theory_of)
from .core import (CoreVerdict, KappaResult, classify, compare_axiomatizations,
                   consistent_core, core_membership, kappa, kappa_upper_bound)
from .derivation import (Index, enumerate_supports, index_of, min_support,
                         min_support_length, verify_sequence)
from .errors import (BudgetExceededError, DomainError, IncoreError, NoIndexError,
                     NotAKappaWitnessError, NotDerivableError, SoundnessError,
                     SystemParseError)
from .formal import (DeductionSystem, Rule, apply_deduction, formula_length,
                     parse_system, serialize_system, validate_system)
from .machine import SatValue, eval_guarded, generate_pa_mi, saturating_op

__all__ = [name for name in dir() if not name.startswith("_")]
