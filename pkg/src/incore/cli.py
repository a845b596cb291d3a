"""``incore`` command line.

Exit status: 0 success (an inconsistent system is a result, not a failure),
1 usage/parse/domain error, 2 sentence not derivable or has no index,
3 enumeration budget exceeded, 4 internal soundness failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import closure, core, derivation, machine
from .errors import (BudgetExceededError, DomainError, ExpressionError, InvalidSystemError,
                     NoIndexError, NotAKappaWitnessError, NotDerivableError, SoundnessError,
                     SystemParseError)
from .formal import DeductionSystem, canonical, parse_system, serialize_system

EXIT_USAGE, EXIT_UNDERIVABLE, EXIT_BUDGET, EXIT_UNSOUND = 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt_set(formulas) -> str:
    return "{" + ", ".join(canonical(formulas)) + "}"


def _table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(str(c)) for c in col) for col in zip(header, *rows)]
    lines = ["  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip()
             for r in [header, *rows]]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _load(path: str) -> DeductionSystem:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_system(text)


def _need_sentence(args) -> str:
    if args.sentence is None:
        raise UsageError(f"{args.command} requires --sentence")
    return args.sentence


# -- subcommands: each returns (json_document, text) -------------------------

def cmd_close(args):
    system = _load(args.system)
    base = system.axioms if args.base is None else args.base.split()
    trace = closure.closure_trace(system, base)
    inconsistent = trace.union == system.wffs
    doc = trace.to_dict() | {"inconsistent": inconsistent}
    lines = [f"T_{i} = {_fmt_set(s)}" for i, s in enumerate(trace.states)]
    kind = "fixpoint" if trace.is_fixpoint else f"cycle of period {trace.period}"
    lines.append(f"termination: {kind} at step {trace.recurs_at}")
    lines.append(f"T(A) = {_fmt_set(trace.union)}")
    lines.append("T(A) = W: INCONSISTENT" if inconsistent else "T(A) != W: consistent")
    return doc, "\n".join(lines)


def cmd_index(args):
    system = _load(args.system)
    sentence = _need_sentence(args)
    m, seq = derivation.min_support(system, sentence, budget=args.budget)
    idx = derivation.Index(closure.depth_of(system, sentence), m)
    witness = " <- ".join(_fmt_set(level) for level in seq)
    return idx.to_dict(), f"index({sentence}) = {idx}\nwitness: {witness}"


def cmd_sigma(args):
    system = _load(args.system)
    sentence = _need_sentence(args)
    seqs = derivation.enumerate_supports(system, sentence, args.policy, args.bound, args.budget)
    doc = {"sentence": sentence, "policy": args.policy, "count": len(seqs),
           "sequences": [derivation.sequence_to_json(s) for s in seqs]}
    lines = [f"{len(seqs)} support sequence(s) for {sentence} ({args.policy} depth)"]
    for s in seqs:
        lines.append(f"  depth {len(s)}  length {derivation.support_length(s)}  "
                     + " <- ".join(_fmt_set(level) for level in s))
    return doc, "\n".join(lines)


def _verdict_row(v: core.CoreVerdict) -> list[str]:
    witness = _fmt_set(v.witness) if v.witness is not None else "-"
    return [v.sentence, v.status, witness, "yes" if v.is_axiom else "no"]


def cmd_core(args):
    system = _load(args.system)
    if args.sentence is not None:
        v = core.core_membership(system, args.sentence)
        return v.to_dict(), _table(["sentence", "status", "witness", "axiom"], [_verdict_row(v)])
    verdicts = core.consistent_core(system)
    doc = {"inconsistent": closure.is_inconsistent(system),
           "core": [v.sentence for v in verdicts if v.core],
           "verdicts": [v.to_dict() for v in verdicts]}
    text = _table(["sentence", "status", "witness", "axiom"], [_verdict_row(v) for v in verdicts])
    return doc, text + f"\nC_A = {_fmt_set(doc['core'])}"


def cmd_kappa(args):
    system = _load(args.system)
    if args.sentence is not None:
        bound = core.kappa_upper_bound(system, args.sentence, args.budget)
        return ({"sentence": args.sentence, "upper_bound": bound.to_dict()},
                f"kappa <= {bound} (from non-core {args.sentence})")
    k = core.kappa(system, args.budget)
    text = "kappa = none (every indexed sentence is core)" if k.value is None \
        else f"kappa = {k.value} (witness {k.witness})"
    if k.non_core_axioms:
        text += f"\nnon-core axioms (no index): {_fmt_set(k.non_core_axioms)}"
    return k.to_dict(), text


def cmd_classify(args):
    system = _load(args.system)
    report = core.classify(system, args.budget)
    rows = [[r.sentence, str(r.depth), str(r.index) if r.index else "axiom", r.verdict.status,
             "yes" if r.verdict.via_theorem else "no",
             "core" if r.min_depth_sigma_core else "non-core", r.note] for r in report.rows]
    kap = report.kappa.value
    head = [f"inconsistent: {'yes' if report.inconsistent else 'no'}",
            f"kappa: {kap if kap else 'none'}"
            + (f" (witness {report.kappa.witness})" if report.kappa.witness else "")]
    table = _table(["sentence", "depth", "index", "status", "via theorem",
                    "min-depth sigma", "note"], rows)
    return report.to_dict(), "\n".join(head) + "\n" + table


def cmd_equiv(args):
    a, b = _load(args.system), _load(args.other)
    report = core.compare_axiomatizations(a, b, args.budget)
    if not report.equivalent:
        return report.to_dict(), (f"NOT equivalent\nT(A) = {_fmt_set(report.theory_a)}\n"
                                  f"T(B) = {_fmt_set(report.theory_b)}")

    def show(idx):
        return str(idx) if idx else "axiom"
    rows = [[r.sentence, show(r.index_a), show(r.index_b), "*" if r.changed else ""]
            for r in report.rows]
    ka, kb = report.kappa_a.value, report.kappa_b.value
    text = (f"equivalent: T(A) = T(B)\nkappa A: {ka if ka else 'none'}   "
            f"kappa B: {kb if kb else 'none'}\n"
            + _table(["sentence", "index A", "index B", "changed"], rows)
            + f"\n{report.changed} index change(s)")
    return report.to_dict(), text


def cmd_laws(args):
    system = _load(args.system)
    report = closure.check_operator_laws(system, args.samples, args.seed)
    rows = [[r.law, str(r.checked), str(r.violations), "pass" if r.passed else "FAIL"]
            for r in (report.results[name] for name in closure.LAWS)]
    text = f"seed {report.seed}, {report.samples} samples\n" + _table(
        ["law", "checked", "violations", "result"], rows)
    return report.to_dict(), text


def cmd_demo(args):
    system = machine.generate_pa_mi(args.m)
    if args.emit:
        return None, serialize_system(system).rstrip("\n")
    report = core.classify(system, args.budget)
    doc = {"m": args.m, "wffs": len(system.wffs), "axioms": canonical(system.axioms),
           "mi_axiom": machine.mi_axiom(args.m), "inconsistent": report.inconsistent,
           "core": report.core, "kappa": report.kappa.to_dict()}
    kap = report.kappa
    text = "\n".join([
        f"PA + MI with machine infinity M = {args.m} ({len(system.wffs)} wffs)",
        f"MI axiom: {doc['mi_axiom']}",
        f"T(A) = W: {'INCONSISTENT' if report.inconsistent else 'consistent'}",
        f"C_A = {_fmt_set(report.core)}",
        f"kappa = {kap.value if kap.value else 'none'}"
        + (f" (witness {kap.witness})" if kap.witness else ""),
        f"non-core axioms: {_fmt_set(kap.non_core_axioms)}",
    ])
    return doc, text


def cmd_satdemo(args):
    expr = machine.parse_expr(args.expr)
    verdict = machine.eval_guarded(expr, args.m)
    exact = machine.eval_exact(expr)
    doc = {"expr": machine.format_expr(expr), "m": args.m, "exact": exact} | verdict.to_dict()
    text = (f"{doc['expr']} with M = {args.m}: value {verdict.result.value}"
            f"{' (saturated)' if verdict.result.saturated else ''}, exact {exact}, "
            + ("SAFE" if verdict.safe else "UNSAFE: reached machine infinity"))
    return doc, text


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="incore", description="Closure, consistent-core and safety analysis "
                     "of finite deduction systems.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help, system=True):
        p = sub.add_parser(name, help=help)
        if system:
            p.add_argument("system", help="system spec file")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(func=func)
        return p

    def sentence(p):
        p.add_argument("--sentence", metavar="FORMULA")

    def budget(p):
        p.add_argument("--budget", type=int, default=derivation.DEFAULT_BUDGET)

    p = add("close", cmd_close, "iterate T_n and report inconsistency")
    p.add_argument("--base", help="space-separated start set (default: the axioms)")
    p = add("index", cmd_index, "index (depth, support length) of a sentence")
    sentence(p), budget(p)
    p = add("sigma", cmd_sigma, "enumerate support sequences of a sentence")
    sentence(p), budget(p)
    p.add_argument("--policy", choices=("minimal", "all"), default="minimal")
    p.add_argument("--bound", type=int)
    p = add("core", cmd_core, "consistent core membership")
    sentence(p)
    p = add("kappa", cmd_kappa, "kappa threshold (or an upper bound from --sentence)")
    sentence(p), budget(p)
    budget(add("classify", cmd_classify, "full safety classification"))
    p = add("equiv", cmd_equiv, "compare two axiomatizations")
    p.add_argument("other", help="second system spec file")
    budget(p)
    p = add("laws", cmd_laws, "sample-check the operator laws")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)

    demo = sub.add_parser("demo", help="built-in demonstrations")
    demo_sub = demo.add_subparsers(dest="demo", required=True, parser_class=_Parser)
    p = demo_sub.add_parser("pa-mi", help="Peano fragment with machine infinity")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--emit", action="store_true", help="print the generated system file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    budget(p)
    p.set_defaults(func=cmd_demo)

    p = add("satdemo", cmd_satdemo, "saturating arithmetic with overflow guard", system=False)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--expr", required=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc, text = args.func(args)
    except (UsageError, SystemParseError, InvalidSystemError, DomainError,
            ExpressionError, ValueError) as exc:
        print(f"incore: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotDerivableError, NoIndexError, NotAKappaWitnessError) as exc:
        print(f"incore: {exc}", file=sys.stderr)
        return EXIT_UNDERIVABLE
    except BudgetExceededError as exc:
        found = len(exc.partial) if exc.partial is not None else 0
        print(f"incore: {exc} (partial results: {found}, incomplete)", file=sys.stderr)
        return EXIT_BUDGET
    except SoundnessError as exc:
        print(f"incore: soundness failure: {exc}", file=sys.stderr)
        return EXIT_UNSOUND
    if args.format == "json" and doc is not None:
        print(json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False))
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
