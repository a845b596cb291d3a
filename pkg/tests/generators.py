"""Seeded random systems and expression trees for the property suites."""

import random

from incore.formal import DeductionSystem, Rule
from incore.machine import BinOp, Lit


def random_system(rng: random.Random, max_wffs: int = 8, max_rules: int = 12,
                  max_premises: int = 3) -> DeductionSystem:
    alphabet = ("a", "b", "c")
    size = rng.randint(3, max_wffs)
    wffs: set[str] = set()
    while len(wffs) < size:
        wffs.add("".join(rng.choice(alphabet) for _ in range(rng.randint(1, 3))))
    universe = sorted(wffs)
    rules = []
    for _ in range(rng.randint(1, max_rules)):
        k = 0 if rng.random() < 0.05 else rng.randint(1, min(max_premises, size))
        premises = rng.sample(universe, k)
        if rng.random() < 0.15:
            conclusions = universe  # an "explosion" rule
        else:
            conclusions = rng.sample(universe, rng.randint(1, min(3, size)))
        rules.append(Rule(premises, conclusions))
    axioms = rng.sample(universe, rng.randint(1, min(4, size)))
    return DeductionSystem(alphabet, universe, rules, axioms).checked()


def random_systems(count: int = 200, seed: int = 2024) -> list[DeductionSystem]:
    rng = random.Random(seed)
    return [random_system(rng) for _ in range(count)]


def random_expr(rng: random.Random, m: int, depth: int = 4):
    if depth == 0 or rng.random() < 0.3:
        return Lit(rng.randint(-m, m))
    kind = rng.choice(("add", "sub", "mul"))
    return BinOp(kind, random_expr(rng, m, depth - 1), random_expr(rng, m, depth - 1))
