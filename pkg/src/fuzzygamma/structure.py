"""Finite ordered gamma-groupoids and gamma-semigroups.

A gamma structure is a finite carrier M together with a finite family of
binary operations (indexed by "gamma" labels) and a partial order on M.
The order is expected to be compatible with every operation on both sides;
validation computes and records this, and can be relaxed on request.
All set-level primitives (downward closure, subset products, the
factorization relation) live here.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from functools import lru_cache


class StructureError(ValueError):
    """A structure description violates one of the validation axioms."""


@dataclass(frozen=True)
class GammaStructure:
    """Validated finite ordered gamma-groupoid.

    ``table[x][g][y]`` is the index of ``elements[x] * elements[y]`` under
    operation ``gammas[g]``.  ``leq`` is the full reflexive-transitive order
    relation as index pairs ``(i, j)`` meaning ``elements[i] <= elements[j]``.
    Instances are immutable and safe for concurrent reads.
    """

    elements: tuple[str, ...]
    gammas: tuple[str, ...]
    table: tuple[tuple[tuple[int, ...], ...], ...]
    leq: frozenset[tuple[int, int]]
    associative: bool
    compatible: bool

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def m(self) -> int:
        return len(self.gammas)

    def mul(self, x: int, g: int, y: int) -> int:
        return self.table[x][g][y]

    def le(self, i: int, j: int) -> bool:
        return (i, j) in self.leq

    def index(self, label: str) -> int:
        try:
            return self.elements.index(label)
        except ValueError:
            raise StructureError(f"unknown element label {label!r}") from None

    def carrier(self) -> frozenset[int]:
        return frozenset(range(self.n))

    def digest(self) -> str:
        blob = json.dumps(
            [
                list(self.elements),
                list(self.gammas),
                [[list(row) for row in plane] for plane in self.table],
                sorted(self.leq),
            ],
            separators=(",", ":"),
        )
        return hashlib.sha256(blob.encode()).hexdigest()[:12]

    def opposite(self) -> "GammaStructure":
        """Mirror structure: the outer arguments of every product swapped."""
        table = tuple(
            tuple(tuple(self.table[y][g][x] for y in range(self.n))
                  for g in range(self.m))
            for x in range(self.n)
        )
        return GammaStructure(self.elements, self.gammas, table, self.leq,
                              self.associative, self.compatible)


def transitive_closure(n: int, pairs) -> frozenset[tuple[int, int]]:
    """Reflexive-transitive closure of a set of index pairs."""
    rel = [[False] * n for _ in range(n)]
    for i in range(n):
        rel[i][i] = True
    for i, j in pairs:
        rel[i][j] = True
    for k in range(n):
        rk = rel[k]
        for i in range(n):
            if rel[i][k]:
                ri = rel[i]
                for j in range(n):
                    if rk[j]:
                        ri[j] = True
    return frozenset((i, j) for i in range(n) for j in range(n) if rel[i][j])


def table_is_associative(table, n: int, m: int) -> bool:
    for x in range(n):
        for g in range(m):
            row = table[x][g]
            for y in range(n):
                xy = row[y]
                for mu in range(m):
                    for z in range(n):
                        if table[xy][mu][z] != table[x][g][table[y][mu][z]]:
                            return False
    return True


def order_is_compatible(table, n: int, m: int, leq) -> bool:
    """Two-sided compatibility: i <= j implies i*c <= j*c and c*i <= c*j."""
    for i, j in leq:
        if i == j:
            continue
        for g in range(m):
            for c in range(n):
                if (table[i][g][c], table[j][g][c]) not in leq:
                    return False
                if (table[c][g][i], table[c][g][j]) not in leq:
                    return False
    return True


def validate_structure(elements, gammas, table, order,
                       require_compat: bool = True) -> GammaStructure:
    """Build a GammaStructure from raw parts.

    ``order`` may be any generating set of pairs; the reflexive-transitive
    closure is taken before antisymmetry is checked.  With
    ``require_compat=False`` an order-incompatible structure is accepted and
    flagged via the ``compatible`` attribute.
    """
    elements = tuple(str(e) for e in elements)
    gammas = tuple(str(g) for g in gammas)
    if not elements:
        raise StructureError("carrier must be nonempty")
    if not gammas:
        raise StructureError("operation family must be nonempty")
    if len(set(elements)) != len(elements):
        raise StructureError("duplicate element labels")
    if len(set(gammas)) != len(gammas):
        raise StructureError("duplicate operation labels")
    n, m = len(elements), len(gammas)

    if len(table) != n:
        raise StructureError(f"table must have {n} planes, got {len(table)}")
    planes = []
    for x, plane in enumerate(table):
        if len(plane) != m:
            raise StructureError(
                f"table plane {x} must have {m} rows, got {len(plane)}")
        rows = []
        for row in plane:
            if len(row) != n:
                raise StructureError(
                    f"table row in plane {x} must have {n} entries")
            for v in row:
                if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                    raise StructureError(f"table entry {v!r} out of range")
            rows.append(tuple(row))
        planes.append(tuple(rows))
    table = tuple(planes)

    for i, j in order:
        if not (0 <= i < n and 0 <= j < n):
            raise StructureError(f"order pair ({i}, {j}) out of range")
    leq = transitive_closure(n, order)
    for i, j in leq:
        if i != j and (j, i) in leq:
            raise StructureError(
                f"antisymmetry violation between {elements[i]!r} and "
                f"{elements[j]!r}")

    compatible = order_is_compatible(table, n, m, leq)
    if require_compat and not compatible:
        raise StructureError("order is not compatible with the operations")

    return GammaStructure(elements, gammas, table, leq,
                          table_is_associative(table, n, m), compatible)


def is_associative(S: GammaStructure) -> bool:
    """Recompute associativity over all triples (the stored flag agrees)."""
    return table_is_associative(S.table, S.n, S.m)


def downward_closure(S: GammaStructure, subset) -> frozenset[int]:
    """All elements lying below some member of ``subset``."""
    subset = frozenset(subset)
    return frozenset(t for t in range(S.n)
                     if any(S.le(t, a) for a in subset))


def subset_product(S: GammaStructure, A, B) -> frozenset[int]:
    """{a * b : a in A, b in B} over every operation."""
    out = set()
    for a in A:
        for g in range(S.m):
            row = S.table[a][g]
            for b in B:
                out.add(row[b])
    return frozenset(out)


def chain_product(S: GammaStructure, *subsets) -> frozenset[int]:
    """Left-to-right chained subset product of two or more subsets."""
    acc = frozenset(subsets[0])
    for nxt in subsets[1:]:
        acc = subset_product(S, acc, nxt)
    return acc


@lru_cache(maxsize=None)
def factorizations(S: GammaStructure) -> tuple[frozenset[tuple[int, int]], ...]:
    """For each a, the deduplicated pairs (y, z) with a <= y*z for some op."""
    out = []
    for a in range(S.n):
        pairs = set()
        for y in range(S.n):
            for g in range(S.m):
                row = S.table[y][g]
                for z in range(S.n):
                    if S.le(a, row[z]):
                        pairs.add((y, z))
        out.append(frozenset(pairs))
    return tuple(out)


def factorization_gamma(S: GammaStructure, a: int, y: int, z: int):
    """Smallest operation index witnessing a <= y*z, or None."""
    for g in range(S.m):
        if S.le(a, S.table[y][g][z]):
            return g
    return None
