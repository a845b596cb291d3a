"""Brute-force reference computations.

Nothing here calls the library's closure, search or core code; only the
``DeductionSystem`` container is shared so fixtures can be reused.
"""

from itertools import chain, combinations, product


def powerset(items):
    items = sorted(items)
    return [frozenset(c) for c in chain.from_iterable(
        combinations(items, k) for k in range(len(items) + 1))]


def fire(system, s):
    s = frozenset(s)
    out = set()
    for rule in system.rules:
        if all(p in s for p in rule.premises):
            out |= rule.conclusions
    return frozenset(out)


def states(system, base, extra=0):
    """T_0, T_1, ... up to the first repeated state, plus ``extra`` more."""
    seq = [frozenset(base)]
    while seq[-1] not in seq[:-1]:
        seq.append(fire(system, seq[-1]))
    for _ in range(extra):
        seq.append(fire(system, seq[-1]))
    return seq


def theory(system, base):
    return frozenset().union(*states(system, base))


def level(system, n):
    """T_n(A) by plain iteration."""
    s = frozenset(system.axioms)
    for _ in range(n):
        s = fire(system, s)
    return s


def depth(system, p):
    for n, s in enumerate(states(system, system.axioms)):
        if p in s:
            return n
    return None


def length(formulas):
    return sum(len(f) for f in formulas)


def explicit_supports(system, p, n):
    """Every (S_{n-1}, ..., S_0) with S_i ranging over all subsets of T_i(A)."""
    pools = [powerset(level(system, i)) for i in range(n)]
    out = set()
    for levels in product(*pools):  # levels[i] = S_i
        if p not in fire(system, levels[n - 1]):
            continue
        if not levels[0] <= system.axioms:
            continue
        if all(levels[i] <= fire(system, levels[i - 1]) for i in range(1, n)):
            out.add(tuple(reversed(levels)))
    return out


def explicit_space(system, n):
    return sum(len(level(system, i)) for i in range(n))


def min_support_by_union(system, p, n):
    """Minimum support length at depth n by scanning every candidate union U of W.

    For a fixed U the largest sequence using only formulas of U takes
    S_0 = U & A and S_i = U & D(S_{i-1}); any sequence inside U sits below it
    level by level, so U admits a sequence iff that one derives p.
    """
    best = None
    for u in powerset(system.wffs):
        levels = [u & frozenset(system.axioms)]
        for i in range(1, n):
            levels.append(u & fire(system, levels[-1]) & level(system, i))
        if p in fire(system, levels[-1]):
            cost = length(frozenset().union(*levels))
            best = cost if best is None else min(best, cost)
    return best


def min_support_depth_one(system, p):
    costs = [length(b) for b in powerset(system.axioms) if p in fire(system, b)]
    return min(costs) if costs else None


def core_by_sigma(system, p):
    """Core status read off support sequences of every depth.

    For each bottom level S_0 with consistent theory, the largest sequence
    above it is S_i = D(S_{i-1}) & T_i(A); it is walked until the pair
    (S_i, T_i(A)) repeats, so every depth is covered.
    """
    w = frozenset(system.wffs)
    for s0 in powerset(system.axioms):
        if theory(system, s0) == w:
            continue
        if p in s0:
            return True
        cur, full, seen = s0, frozenset(system.axioms), set()
        while (cur, full) not in seen:
            seen.add((cur, full))
            if p in fire(system, cur):
                return True
            cur, full = fire(system, cur) & fire(system, full), fire(system, full)
    return False


def core_set(system):
    return {p for p in theory(system, system.axioms) if core_by_sigma(system, p)}


def kappa_by_scan(system, index_of):
    """Lexicographic minimum of ``index_of`` over non-core sentences of depth >= 1."""
    core = core_set(system)
    candidates = [(index_of(p), p) for p in sorted(theory(system, system.axioms))
                  if p not in core and depth(system, p) > 0]
    return min(candidates) if candidates else None
