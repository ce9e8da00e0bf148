"""Fuzzy subsets over a gamma structure and their sup-min calculus.

A fuzzy subset assigns each carrier element a membership degree in [0, 1].
Composition is sup-min over the factorization relation; the order, meet and
the constant-one subset make the fuzzy subsets an ordered algebra.  The four
fuzzy ideal predicates are provided in definitional form and in
composition-inequality form (both must agree on valid structures; the
agreement itself is verified in the law registry).

Membership degrees only ever flow through comparisons, min and max, so
binary64 floats are exact here.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .structure import (GammaStructure, downward_closure, factorizations,
                        subset_product)


@dataclass(frozen=True)
class FuzzySubset:
    """Membership map bound to one structure; immutable."""

    structure: GammaStructure
    values: tuple[float, ...]

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        if len(vals) != self.structure.n:
            raise ValueError("membership vector length does not match carrier")
        for v in vals:
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"membership degree {v!r} outside [0, 1]")
        object.__setattr__(self, "values", vals)

    def __call__(self, i: int) -> float:
        return self.values[i]

    def at(self, label: str) -> float:
        return self.values[self.structure.index(label)]

    def compose(self, other: "FuzzySubset") -> "FuzzySubset":
        return compose(self, other)

    def meet(self, other: "FuzzySubset") -> "FuzzySubset":
        return meet(self, other)

    def leq(self, other: "FuzzySubset") -> bool:
        return leq(self, other)

    def support(self) -> frozenset[int]:
        return frozenset(i for i, v in enumerate(self.values) if v > 0.0)

    def to_dict(self) -> dict[str, float]:
        return dict(zip(self.structure.elements, self.values))


def _require_same(f: FuzzySubset, g: FuzzySubset) -> None:
    if f.structure != g.structure:
        raise ValueError("fuzzy subsets bound to different structures")


def compose(f: FuzzySubset, g: FuzzySubset) -> FuzzySubset:
    """Sup-min composition: sup over factorizations of a of min(f(y), g(z))."""
    _require_same(f, g)
    S = f.structure
    facts = factorizations(S)
    vals = []
    for a in range(S.n):
        best = 0.0
        for y, z in facts[a]:
            w = min(f.values[y], g.values[z])
            if w > best:
                best = w
        vals.append(best)
    return FuzzySubset(S, tuple(vals))


def square(f: FuzzySubset) -> FuzzySubset:
    return compose(f, f)


def meet(f: FuzzySubset, g: FuzzySubset) -> FuzzySubset:
    _require_same(f, g)
    return FuzzySubset(f.structure,
                       tuple(min(a, b) for a, b in zip(f.values, g.values)))


def leq(f: FuzzySubset, g: FuzzySubset) -> bool:
    _require_same(f, g)
    return all(a <= b for a, b in zip(f.values, g.values))


def constant_one(S: GammaStructure) -> FuzzySubset:
    return FuzzySubset(S, (1.0,) * S.n)


def constant_zero(S: GammaStructure) -> FuzzySubset:
    return FuzzySubset(S, (0.0,) * S.n)


def characteristic(S: GammaStructure, subset) -> FuzzySubset:
    subset = frozenset(subset)
    return FuzzySubset(S, tuple(1.0 if i in subset else 0.0
                                for i in range(S.n)))


def point_characteristic(S: GammaStructure, a: int) -> FuzzySubset:
    return characteristic(S, {a})


def is_order_reversing(f: FuzzySubset) -> bool:
    S = f.structure
    return all(f.values[i] >= f.values[j] for i, j in S.leq if i != j)


def is_fuzzy_right_ideal(f: FuzzySubset) -> bool:
    S = f.structure
    if not is_order_reversing(f):
        return False
    for x in range(S.n):
        fx = f.values[x]
        for g in range(S.m):
            row = S.table[x][g]
            for y in range(S.n):
                if f.values[row[y]] < fx:
                    return False
    return True


def is_fuzzy_left_ideal(f: FuzzySubset) -> bool:
    S = f.structure
    if not is_order_reversing(f):
        return False
    for x in range(S.n):
        for g in range(S.m):
            row = S.table[x][g]
            for y in range(S.n):
                if f.values[row[y]] < f.values[y]:
                    return False
    return True


def is_fuzzy_bi_ideal(f: FuzzySubset) -> bool:
    # The inner product is taken over all pairs of operations.
    S = f.structure
    if not S.associative:
        raise ValueError("bi-ideal predicate requires an associative structure")
    if not is_order_reversing(f):
        return False
    for x in range(S.n):
        for g in range(S.m):
            for y in range(S.n):
                xy = S.table[x][g][y]
                for mu in range(S.m):
                    row = S.table[xy][mu]
                    for z in range(S.n):
                        if f.values[row[z]] < min(f.values[x], f.values[z]):
                            return False
    return True


def is_fuzzy_quasi_ideal(f: FuzzySubset) -> bool:
    one = constant_one(f.structure)
    return (is_order_reversing(f)
            and leq(meet(compose(f, one), compose(one, f)), f))


def is_fuzzy_right_ideal_via_composition(f: FuzzySubset) -> bool:
    return (is_order_reversing(f)
            and leq(compose(f, constant_one(f.structure)), f))


def is_fuzzy_left_ideal_via_composition(f: FuzzySubset) -> bool:
    return (is_order_reversing(f)
            and leq(compose(constant_one(f.structure), f), f))


def is_fuzzy_bi_ideal_via_composition(f: FuzzySubset) -> bool:
    if not f.structure.associative:
        raise ValueError("bi-ideal predicate requires an associative structure")
    one = constant_one(f.structure)
    return (is_order_reversing(f)
            and leq(compose(compose(f, one), f), f))


def _principal_right_sets(S: GammaStructure):
    M = S.carrier()
    return [downward_closure(S, {t} | subset_product(S, {t}, M))
            for t in range(S.n)]


def _principal_left_sets(S: GammaStructure):
    M = S.carrier()
    return [downward_closure(S, {t} | subset_product(S, M, {t}))
            for t in range(S.n)]


def generated_fuzzy_right_ideal(f: FuzzySubset) -> FuzzySubset:
    """Pointwise-least fuzzy right ideal lying above f (associative case)."""
    S = f.structure
    principal = _principal_right_sets(S)
    vals = []
    for x in range(S.n):
        vals.append(max(f.values[t] for t in range(S.n) if x in principal[t]))
    return FuzzySubset(S, tuple(vals))


def generated_fuzzy_left_ideal(f: FuzzySubset) -> FuzzySubset:
    S = f.structure
    principal = _principal_left_sets(S)
    vals = []
    for x in range(S.n):
        vals.append(max(f.values[t] for t in range(S.n) if x in principal[t]))
    return FuzzySubset(S, tuple(vals))


GRID_CAP = 1_000_000
SAMPLED_COUNT = 10_000


@dataclass(frozen=True)
class GridBattery:
    """Finite test universe of fuzzy subsets.

    Exhaustive mode enumerates every membership vector on an L-level uniform
    grid, in lexicographic order (element index major, level ascending).
    Sampled mode yields seeded uniform random vectors plus all characteristic
    functions and the generated one-sided ideals of point characteristics.
    """

    levels: int
    mode: str = "exhaustive"
    seed: int | None = None
    samples: int = SAMPLED_COUNT
    cap: int = GRID_CAP

    def __post_init__(self):
        if self.levels < 2:
            raise ValueError("a grid battery needs at least 2 levels")
        if self.mode not in ("exhaustive", "sampled"):
            raise ValueError(f"unknown battery mode {self.mode!r}")
        if self.mode == "sampled" and self.seed is None:
            raise ValueError("sampled batteries require a seed")

    def describe(self, S: GammaStructure) -> str:
        if self.mode == "exhaustive":
            return (f"exhaustive grid L={self.levels} "
                    f"({self.levels ** S.n} members)")
        return (f"sampled battery ({self.samples} draws, seed={self.seed}) "
                f"+ characteristics + generated point ideals")


def grid_levels(levels: int) -> tuple[float, ...]:
    return tuple(i / (levels - 1) for i in range(levels))


def default_levels(S: GammaStructure) -> int:
    # 2n+2 levels reproduce any real-valued violation of a min/max/compare
    # statement in at most 2n values (0 and 1 fixed).
    return 2 * S.n + 2


def default_battery(S: GammaStructure, levels: int | None = None,
                    seed: int = 0) -> GridBattery:
    L = levels if levels is not None else default_levels(S)
    if L ** S.n <= GRID_CAP:
        return GridBattery(levels=L)
    return GridBattery(levels=L, mode="sampled", seed=seed)


def enumerate_grid_battery(S: GammaStructure, battery: GridBattery):
    """Deterministic stream of battery members."""
    if battery.mode == "exhaustive":
        if battery.levels ** S.n > battery.cap:
            raise ValueError(
                "exhaustive battery exceeds the cap; switch to sampled mode")
        lv = grid_levels(battery.levels)
        for combo in itertools.product(lv, repeat=S.n):
            yield FuzzySubset(S, combo)
        return
    rng = random.Random(battery.seed)
    for _ in range(battery.samples):
        yield FuzzySubset(S, tuple(rng.random() for _ in range(S.n)))
    for bits in range(2 ** S.n):
        yield characteristic(S, {i for i in range(S.n) if bits >> i & 1})
    for a in range(S.n):
        yield generated_fuzzy_right_ideal(point_characteristic(S, a))
        yield generated_fuzzy_left_ideal(point_characteristic(S, a))
