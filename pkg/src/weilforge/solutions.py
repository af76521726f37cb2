"""Exhaustive solution enumeration and the restriction solution bijection.

Points are tuples of field codes.  Affine enumeration walks GF(Q)^m in
code order (lexicographic by coordinate codes), so listings are
deterministic.  The bijection check maps each K-solution coordinate-wise
through the basis decomposition and verifies that this is a bijection
onto the k-solutions of the restricted system.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from .errors import BudgetExceeded, NotHomogeneous
from .ring import PolySystem
from .weil import WeilContext, weil_restrict_system

DEFAULT_POINT_BUDGET = 1 << 22


def enumerate_affine_solutions(F: PolySystem, budget: int = DEFAULT_POINT_BUDGET):
    """All points of GF(Q)^m annihilating every generator, in code order."""
    ring = F.ring
    Q = ring.field.order
    total = Q ** ring.nvars
    if total > budget:
        raise BudgetExceeded(f"{total} points exceed the budget {budget}")
    polys = [f for f in F if not f.is_zero]
    out = []
    for point in itertools.product(range(Q), repeat=ring.nvars):
        if all(f.evaluate(point) == 0 for f in polys):
            out.append(point)
    return out


def enumerate_projective_solutions(F: PolySystem, budget: int = DEFAULT_POINT_BUDGET) -> int:
    """Count projective zeros (one representative per line, leading 1)."""
    ring = F.ring
    if not F.is_homogeneous():
        raise NotHomogeneous("projective enumeration needs a homogeneous system")
    Q = ring.field.order
    m = ring.nvars
    total = (Q ** m - 1) // (Q - 1)
    if total > budget:
        raise BudgetExceeded(f"{total} points exceed the budget {budget}")
    polys = [f for f in F if not f.is_zero]
    count = 0
    for lead in range(m):
        for rest in itertools.product(range(Q), repeat=m - lead - 1):
            point = (0,) * lead + (1,) + rest
            if all(f.evaluate(point) == 0 for f in polys):
                count += 1
    return count


@dataclass
class BijectionReport:
    """Cardinalities and verdict of the solution-set bijection check."""

    source_count: int
    target_count: int
    matched: bool
    mismatch_witness: tuple | None = None

    @property
    def ok(self) -> bool:
        return self.matched and self.source_count == self.target_count


def decompose_point(ctx: WeilContext, point) -> tuple:
    """Map a K-point to the corresponding k-point, coordinate-wise."""
    out = []
    for code in point:
        out.extend(ctx.ext.decompose_code(code))
    return tuple(out)


def bijection_check(ctx: WeilContext, F: PolySystem,
                    budget: int = DEFAULT_POINT_BUDGET) -> BijectionReport:
    """Verify that basis decomposition maps V_K(F) bijectively onto V_k(Weil(F))."""
    W = weil_restrict_system(ctx, F)
    src = enumerate_affine_solutions(F, budget)
    tgt = enumerate_affine_solutions(W, budget)
    tgt_set = set(tgt)
    images = set()
    for point in src:
        image = decompose_point(ctx, point)
        if image not in tgt_set:
            return BijectionReport(len(src), len(tgt), False, point)
        images.add(image)
    matched = len(images) == len(src) and images == tgt_set
    return BijectionReport(len(src), len(tgt), matched)
