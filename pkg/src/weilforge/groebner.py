"""Buchberger engine, normal forms, and ideal-theoretic subroutines.

This module is the reference oracle: reduced degrevlex Groebner bases via
Buchberger's algorithm with the coprime and chain criteria, the division
algorithm, and the saturation / colon / intersection machinery needed for
the generic-coordinates test.  Elimination orders appear only inside this
module (for intersections via an auxiliary variable).

All computations carry a degree cap and fail loudly instead of running
away; the default cap is generous for desk-scale inputs.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import (
    DegreeCapExceeded,
    NotHomogeneous,
    RingMismatch,
    VariableNotLast,
)
from .ring import (
    Polynomial,
    PolySystem,
    Ring,
    mono_deg,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

DEFAULT_DEGREE_CAP = 30


def _desc_key(ring, m):
    """Heap key that pops the largest monomial first."""
    return tuple(
        -part if isinstance(part, int) else tuple(-v for v in part)
        for part in ring.key(m)
    )


class GroebnerBasis:
    """A reduced Groebner basis: monic, inter-reduced, sorted by leading monomial."""

    __slots__ = ("ring", "polys")

    def __init__(self, ring: Ring, polys):
        self.ring = ring
        self.polys = tuple(polys)

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and other.ring == self.ring
            and other.polys == self.polys
        )

    def __hash__(self):
        return hash((self.ring, self.polys))

    def __repr__(self):
        return "GB{" + ", ".join(repr(f) for f in self.polys) + "}"

    @property
    def is_zero_ideal(self) -> bool:
        return not self.polys

    @property
    def is_unit_ideal(self) -> bool:
        return len(self.polys) == 1 and self.polys[0] == self.ring.one

    def leading_monomials(self):
        """Minimal monomial generators of the initial ideal."""
        return [g.leading_monomial() for g in self.polys]

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero

    def max_degree(self) -> int:
        return max((g.degree() for g in self.polys), default=0)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.polys)


def ensure_gb(I, degree_cap: int = DEFAULT_DEGREE_CAP) -> GroebnerBasis:
    """Accept a PolySystem, list, or GroebnerBasis; return a reduced basis."""
    if isinstance(I, GroebnerBasis):
        return I
    if isinstance(I, PolySystem):
        return buchberger_reduced_gb(I, degree_cap=degree_cap)
    return buchberger_reduced_gb(PolySystem(I[0].ring, I), degree_cap=degree_cap)


# ---------------------------------------------------------------------------
# division algorithm
# ---------------------------------------------------------------------------

def normal_form(f: Polynomial, G) -> Polynomial:
    """Full remainder of f under division by G: no term stays reducible."""
    basis = list(G.polys if isinstance(G, GroebnerBasis) else G)
    basis = [g for g in basis if not g.is_zero]
    ring = f.ring
    for g in basis:
        if g.ring != ring:
            raise RingMismatch("normal form across different rings")
    field = ring.field
    lead = [(g.leading_monomial(), field.inv(g.leading_coefficient()), g) for g in basis]

    work = dict(f.terms)
    heap = [(_desc_key(ring, m), m) for m in work]
    heapq.heapify(heap)
    remainder = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = work.pop(m, 0)
        if c == 0:
            continue
        hit = None
        for lm, lcinv, g in lead:
            if mono_divides(lm, m):
                hit = (lm, lcinv, g)
                break
        if hit is None:
            remainder[m] = c
            continue
        lm, lcinv, g = hit
        u = mono_div(m, lm)
        factor = field.mul(c, lcinv)
        for m2, c2 in g.terms[1:]:
            mn = mono_mul(u, m2)
            prev = work.get(mn, 0)
            nv = field.sub(prev, field.mul(factor, c2))
            if nv:
                if prev == 0:
                    heapq.heappush(heap, (_desc_key(ring, mn), mn))
                work[mn] = nv
            else:
                work.pop(mn, None)
    return Polynomial(ring, ring._sorted_terms(remainder))


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    lf, lg = f.leading_monomial(), g.leading_monomial()
    lcm = mono_lcm(lf, lg)
    field = f.ring.field
    uf = mono_div(lcm, lf)
    ug = mono_div(lcm, lg)
    return (f.term_mul(uf, field.inv(f.leading_coefficient()))
            - g.term_mul(ug, field.inv(g.leading_coefficient())))


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient f/g when g divides f exactly; raises on a nonzero remainder."""
    ring = f.ring
    field = ring.field
    lg = g.leading_monomial()
    lcinv = field.inv(g.leading_coefficient())
    quotient = {}
    rest = f
    while not rest.is_zero:
        lm = rest.leading_monomial()
        if not mono_divides(lg, lm):
            raise ValueError("division is not exact")
        u = mono_div(lm, lg)
        c = field.mul(rest.leading_coefficient(), lcinv)
        quotient[u] = c
        rest = rest - g.term_mul(u, c)
    return ring.from_code_dict(quotient)


# ---------------------------------------------------------------------------
# Buchberger
# ---------------------------------------------------------------------------

def buchberger_reduced_gb(F: PolySystem, degree_cap: int = DEFAULT_DEGREE_CAP) -> GroebnerBasis:
    """Reduced Groebner basis of (F) for the ring's order.

    Normal selection strategy (smallest lcm first) with coprime and chain
    criteria.  Raises DegreeCapExceeded when any pair lcm or basis element
    would pass the cap.
    """
    ring = F.ring
    G: list[Polynomial] = []
    lms: list = []
    done: set = set()
    pending: list = []

    def push_pairs(new_idx: int):
        lm_new = lms[new_idx]
        for i in range(new_idx):
            lcm = mono_lcm(lms[i], lm_new)
            heapq.heappush(pending, (mono_deg(lcm), ring.key(lcm), i, new_idx, lcm))

    for f in F:
        if f.is_zero:
            continue
        h = normal_form(f, G)
        if h.is_zero:
            continue
        if h.degree() > degree_cap:
            raise DegreeCapExceeded(degree_cap)
        G.append(h.monic())
        lms.append(h.leading_monomial())
        push_pairs(len(G) - 1)

    while pending:
        deg, _, i, j, lcm = heapq.heappop(pending)
        if deg > degree_cap:
            raise DegreeCapExceeded(degree_cap)
        done.add((i, j))
        # first criterion: coprime leading monomials
        if lcm == mono_mul(lms[i], lms[j]):
            continue
        # chain criterion: a third element divides the lcm and both side
        # pairs were already treated
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if mono_divides(lms[k], lcm):
                p1 = (min(i, k), max(i, k))
                p2 = (min(j, k), max(j, k))
                if p1 in done and p2 in done:
                    skip = True
                    break
        if skip:
            continue
        h = normal_form(s_polynomial(G[i], G[j]), G)
        if h.is_zero:
            continue
        if h.degree() > degree_cap:
            raise DegreeCapExceeded(degree_cap)
        G.append(h.monic())
        lms.append(h.leading_monomial())
        push_pairs(len(G) - 1)

    return GroebnerBasis(ring, _reduce_basis(ring, G))


def _reduce_basis(ring: Ring, G: list[Polynomial]) -> list[Polynomial]:
    """Minimalize and inter-reduce a Groebner basis; sort by leading monomial."""
    minimal: list[Polynomial] = []
    for g in sorted(G, key=lambda p: ring.key(p.leading_monomial())):
        lm = g.leading_monomial()
        if not any(mono_divides(h.leading_monomial(), lm) for h in minimal):
            minimal.append(g)
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        h = normal_form(g, others)
        reduced.append(h.monic())
    reduced.sort(key=lambda p: ring.key(p.leading_monomial()))
    return reduced


def is_groebner(G) -> bool:
    """Buchberger criterion: every S-polynomial reduces to zero."""
    polys = [g for g in (G.polys if isinstance(G, GroebnerBasis) else list(G)) if not g.is_zero]
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            li = polys[i].leading_monomial()
            lj = polys[j].leading_monomial()
            if mono_lcm(li, lj) == mono_mul(li, lj):
                continue
            if not normal_form(s_polynomial(polys[i], polys[j]), polys).is_zero:
                return False
    return True


def max_gb_deg(F, degree_cap: int = DEFAULT_DEGREE_CAP) -> int:
    """Largest degree in the reduced degrevlex Groebner basis of (F)."""
    return ensure_gb(F, degree_cap).max_degree()


def minimal_monomial_generators(monos) -> list:
    """Prune a monomial list to the minimal generators of the ideal it spans."""
    out: list = []
    for m in sorted(set(monos), key=lambda m: (mono_deg(m), m)):
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return out


# ---------------------------------------------------------------------------
# ring plumbing for reordered / extended computations
# ---------------------------------------------------------------------------

def _map_exponents(f: Polynomial, target: Ring, mapper) -> Polynomial:
    return target.from_code_dict({mapper(m): c for m, c in f.terms})


def _to_permuted(f: Polynomial, target: Ring, perm) -> Polynomial:
    # position i of target holds source variable perm[i]
    return _map_exponents(f, target, lambda m: tuple(m[p] for p in perm))


def _from_permuted(f: Polynomial, target: Ring, perm) -> Polynomial:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return _map_exponents(f, target, lambda m: tuple(m[i] for i in inv))


# ---------------------------------------------------------------------------
# saturation, colon, intersection
# ---------------------------------------------------------------------------

def saturate_by_variable(I, var_name: str | None = None,
                         degree_cap: int = DEFAULT_DEGREE_CAP) -> GroebnerBasis:
    """I : v^infinity for a homogeneous ideal, v the last (smallest) variable.

    Valid because in degrevlex with v last, dividing every reduced-basis
    element by its maximal v-power yields a basis of the saturation.
    """
    gb = ensure_gb(I, degree_cap)
    ring = gb.ring
    if var_name is not None and var_name != ring.names[-1]:
        raise VariableNotLast(f"{var_name!r} is not the last variable of {ring!r}")
    if not gb.is_homogeneous():
        raise NotHomogeneous("variable saturation needs a homogeneous ideal")
    divided = []
    for g in gb:
        a = min(m[-1] for m, _ in g.terms)
        if a:
            divided.append(_map_exponents(g, ring, lambda m: m[:-1] + (m[-1] - a,)))
        else:
            divided.append(g)
    return buchberger_reduced_gb(PolySystem(ring, divided), degree_cap=degree_cap)


def ideal_intersection(A, B, degree_cap: int = DEFAULT_DEGREE_CAP) -> GroebnerBasis:
    """A intersect B via one auxiliary variable and an elimination order."""
    ga, gb = ensure_gb(A, degree_cap), ensure_gb(B, degree_cap)
    ring = ga.ring
    if gb.ring != ring:
        raise RingMismatch("intersection of ideals from different rings")
    aux = Ring(ring.field, ("_u",) + ring.names, order=("elim", 1))
    u = aux.variable(0)
    lift = lambda f: _map_exponents(f, aux, lambda m: (0,) + m)
    gens = [u * lift(f) for f in ga]
    one_minus_u = aux.one - u
    gens += [one_minus_u * lift(f) for f in gb]
    # the auxiliary variable inflates intermediate degrees; give it headroom
    elim = buchberger_reduced_gb(PolySystem(aux, gens), degree_cap=degree_cap + 10)
    kept = [g for g in elim if all(m[0] == 0 for m, _ in g.terms)]
    back = [_map_exponents(g, ring, lambda m: m[1:]) for g in kept]
    return buchberger_reduced_gb(PolySystem(ring, back), degree_cap=degree_cap)


def ideal_colon_poly(I, f: Polynomial, degree_cap: int = DEFAULT_DEGREE_CAP) -> GroebnerBasis:
    """(I : f), computed as (I intersect (f)) divided by f."""
    gb = ensure_gb(I, degree_cap)
    if f.is_zero:
        raise ValueError("colon by zero")
    fI = buchberger_reduced_gb(PolySystem(gb.ring, [f]), degree_cap=degree_cap)
    inter = ideal_intersection(gb, fI, degree_cap)
    quots = [exact_divide(g, f) for g in inter]
    return buchberger_reduced_gb(PolySystem(gb.ring, quots), degree_cap=degree_cap)


def ideal_sum(I, gens, degree_cap: int = DEFAULT_DEGREE_CAP) -> GroebnerBasis:
    gb = ensure_gb(I, degree_cap)
    return buchberger_reduced_gb(
        PolySystem(gb.ring, list(gb.polys) + list(gens)), degree_cap=degree_cap)


def ideal_equal(A, B, degree_cap: int = DEFAULT_DEGREE_CAP) -> bool:
    ga, gb = ensure_gb(A, degree_cap), ensure_gb(B, degree_cap)
    return set(ga.polys) == set(gb.polys)


def saturate_irrelevant(I, degree_cap: int = DEFAULT_DEGREE_CAP) -> GroebnerBasis:
    """Saturation with respect to the irrelevant maximal ideal (all variables).

    Computed as the intersection over every variable v of I : v^infinity,
    each via a reordered ring that puts v last.
    """
    gb = ensure_gb(I, degree_cap)
    ring = gb.ring
    if not gb.is_homogeneous():
        raise NotHomogeneous("saturation needs a homogeneous ideal")
    m = ring.nvars
    result: GroebnerBasis | None = None
    for v in range(m):
        perm = [i for i in range(m) if i != v] + [v]
        pring = ring.permuted(perm)
        moved = [_to_permuted(g, pring, perm) for g in gb]
        sat_p = saturate_by_variable(
            buchberger_reduced_gb(PolySystem(pring, moved), degree_cap=degree_cap),
            degree_cap=degree_cap)
        back = [_from_permuted(g, ring, perm) for g in sat_p]
        sat_v = buchberger_reduced_gb(PolySystem(ring, back), degree_cap=degree_cap)
        result = sat_v if result is None else ideal_intersection(result, sat_v, degree_cap)
    return result if result is not None else gb


# ---------------------------------------------------------------------------
# generic coordinates
# ---------------------------------------------------------------------------

@dataclass
class GenericCoordinatesReport:
    """Trace of the last-variables non-zerodivisor ladder."""

    field_used: str
    dimension: int
    steps: list  # (variable name, passed)
    ok: bool
    note: str = ""


def is_generic_coordinates(I, dimension: int | None = None,
                           degree_cap: int = DEFAULT_DEGREE_CAP) -> GenericCoordinatesReport:
    """Test whether the last dim(R/I) variables successively avoid zero division.

    For i = m, m-1, ..., m-d+1 the variable x_i must be a non-zerodivisor
    modulo (I + (x_m, ..., x_{i+1})) saturated at the irrelevant ideal.
    A zero-dimensional quotient passes vacuously.  The verdict is computed
    over the coefficient field as given (reported in the result).
    """
    gb = ensure_gb(I, degree_cap)
    ring = gb.ring
    if not gb.is_homogeneous():
        raise NotHomogeneous("generic-coordinates test needs a homogeneous ideal")
    field_used = repr(ring.field)
    if gb.is_unit_ideal:
        return GenericCoordinatesReport(field_used, 0, [], True, note="unit ideal")
    if dimension is None:
        from .invariants import krull_dimension
        dimension = krull_dimension(gb)
    m = ring.nvars
    steps = []
    current = gb
    for i in range(m - 1, m - 1 - dimension, -1):
        sat = saturate_irrelevant(current, degree_cap)
        xi = ring.variable(i)
        passed = ideal_equal(ideal_colon_poly(sat, xi, degree_cap), sat, degree_cap)
        steps.append((ring.names[i], passed))
        if not passed:
            return GenericCoordinatesReport(field_used, dimension, steps, False)
        current = ideal_sum(current, [xi], degree_cap)
    return GenericCoordinatesReport(field_used, dimension, steps, True)
