"""Machine infinity: a bounded Peano fragment and saturating arithmetic.

``generate_pa_mi(M)`` builds the ground equational theory of the numerals
0, s0, ..., s^{M+1}0 together with the machine-infinity axiom
``s^{M+1}0 = s^M 0``.  Successor injectivity walks that equation down to
``s0 = 0`` and the whole fragment collapses, so T(A) = W.

The arithmetic half clamps every result to [-M, M] and tracks whether a
clamp ever happened; an evaluation is *safe* only if no value on the way
reached the boundary.
"""

from __future__ import annotations

import ast
import operator
from dataclasses import dataclass
from typing import Union

from .errors import ExpressionError
from .formal import DeductionSystem, Rule

PA_MI_CAP = 6


def numeral(k: int) -> str:
    return "s" * k + "0"


def equation(a: str, b: str) -> str:
    return f"{a}={b}"


def generate_pa_mi(m: int, cap: int = PA_MI_CAP) -> DeductionSystem:
    """Ground (PA)+(MI) fragment over the numerals up to s^{m+1}0.

    Rules are all ground instances of reflexivity (premise-free),
    symmetry, transitivity, successor congruence and successor injectivity.
    Reflexivity is kept as a rule as well as an axiom scheme so that every
    sub-axiomatization still has equality reflexive; without it the
    non-inflationary iteration starting from the MI axiom alone oscillates
    and never reaches W.
    """
    if m < 1:
        raise ValueError("machine infinity must be at least 1")
    if m > cap:
        raise ValueError(f"M={m} exceeds the cap of {cap} (|W| grows as (M+2)^2)")
    terms = [numeral(k) for k in range(m + 2)]
    wffs = [equation(a, b) for a in terms for b in terms]
    rules = []
    for a in terms:
        rules.append(Rule((), [equation(a, a)]))
        for b in terms:
            ab = equation(a, b)
            rules.append(Rule([ab], [equation(b, a)]))
            for c in terms:
                rules.append(Rule([ab, equation(b, c)], [equation(a, c)]))
            sa, sb = "s" + a, "s" + b
            if sa in terms and sb in terms:
                rules.append(Rule([ab], [equation(sa, sb)]))
                rules.append(Rule([equation(sa, sb)], [ab]))
    axioms = [equation(t, t) for t in terms] + [mi_axiom(m)]
    return DeductionSystem(("s", "0", "="), wffs, rules, axioms).checked()


def mi_axiom(m: int) -> str:
    """The machine-infinity equation M + 1 = M."""
    return equation(numeral(m + 1), numeral(m))


def reflexivity_axioms(m: int) -> list[str]:
    return [equation(numeral(k), numeral(k)) for k in range(m + 2)]


# ---------------------------------------------------------------------------
# Saturating arithmetic


@dataclass(frozen=True)
class SatValue:
    value: int
    saturated: bool = False


@dataclass(frozen=True)
class GuardVerdict:
    result: SatValue
    safe: bool

    def to_dict(self) -> dict:
        return {"value": self.result.value, "saturated": self.result.saturated,
                "safe": self.safe}


_OPS = {"add": operator.add, "sub": operator.sub, "mul": operator.mul}


def saturating_op(kind: str, a: SatValue, b: SatValue, m: int) -> SatValue:
    exact = _OPS[kind](a.value, b.value)
    clamped = max(-m, min(m, exact))
    return SatValue(clamped, a.saturated or b.saturated or clamped != exact)


@dataclass(frozen=True)
class Lit:
    value: int


@dataclass(frozen=True)
class BinOp:
    kind: str
    left: "Expr"
    right: "Expr"


Expr = Union[Lit, BinOp]

_AST_OPS = {ast.Add: "add", ast.Sub: "sub", ast.Mult: "mul"}
_SYMBOLS = {"add": "+", "sub": "-", "mul": "*"}


def parse_expr(text: str) -> Expr:
    """Parse infix integer arithmetic with ``+ - *`` (``×`` also means ``*``)."""
    try:
        tree = ast.parse(text.replace("×", "*"), mode="eval")
    except SyntaxError as exc:
        raise ExpressionError(f"cannot parse expression {text!r}") from exc

    def convert(node: ast.AST) -> Expr:
        if isinstance(node, ast.BinOp) and type(node.op) in _AST_OPS:
            return BinOp(_AST_OPS[type(node.op)], convert(node.left), convert(node.right))
        if isinstance(node, ast.Constant) and type(node.value) is int:
            return Lit(node.value)
        if (isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub)
                and isinstance(node.operand, ast.Constant) and type(node.operand.value) is int):
            return Lit(-node.operand.value)
        raise ExpressionError(f"unsupported syntax in {text!r}: {ast.dump(node)}")

    return convert(tree.body)


def format_expr(expr: Expr) -> str:
    if isinstance(expr, Lit):
        return str(expr.value) if expr.value >= 0 else f"({expr.value})"
    return f"({format_expr(expr.left)} {_SYMBOLS[expr.kind]} {format_expr(expr.right)})"


def eval_exact(expr: Expr) -> int:
    if isinstance(expr, Lit):
        return expr.value
    return _OPS[expr.kind](eval_exact(expr.left), eval_exact(expr.right))


def eval_guarded(expr: Expr | str, m: int) -> GuardVerdict:
    """Evaluate with saturation; safe iff every value seen stays strictly inside (-M, M)."""
    if isinstance(expr, str):
        expr = parse_expr(expr)
    safe = True

    def walk(node: Expr) -> SatValue:
        nonlocal safe
        if isinstance(node, Lit):
            if abs(node.value) > m:
                raise ExpressionError(f"literal {node.value} outside [-{m}, {m}]")
            out = SatValue(node.value)
        elif isinstance(node, BinOp):
            out = saturating_op(node.kind, walk(node.left), walk(node.right), m)
        else:
            raise ExpressionError(f"malformed expression node {node!r}")
        if abs(out.value) >= m:
            safe = False
        return out

    result = walk(expr)
    return GuardVerdict(result, safe)
