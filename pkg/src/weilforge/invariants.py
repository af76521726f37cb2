"""Hilbert series, Krull dimension, multiplicity, degree of regularity,
graded Betti numbers, Castelnuovo-Mumford regularity, and the
Cohen-Macaulay / complete-intersection predicates.

Hilbert data is computed exactly through the initial ideal (which shares
the Hilbert function) by the standard pivot recursion on minimal monomial
generators.  Betti numbers of a monomial quotient decompose by
multidegree: each candidate multidegree (an lcm of minimal generators)
contributes the reduced simplicial homology of its upper Koszul complex.
For a general homogeneous ideal I the table is computed by exact linear
algebra on the graded strands of the Koszul complex tensored with R/I;
the table of in(I) supplies a rigorous search window, since Betti numbers
can only drop when passing from in(I) to I.  Every computed table is
cross-checked against the Hilbert series through the alternating-sum
identity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from . import _linalg
from .errors import (
    CapTooSmall,
    ImproperIdeal,
    NotHomogeneous,
    NotLinear,
    NotZeroDimensionalTop,
    OpenTable,
    ZeroPolynomial,
)
from .groebner import (
    DEFAULT_DEGREE_CAP,
    GroebnerBasis,
    ensure_gb,
    minimal_monomial_generators,
    normal_form,
)
from .ring import (
    Polynomial,
    PolySystem,
    mono_deg,
    mono_divides,
    mono_lcm,
    top_part,
)

# ---------------------------------------------------------------------------
# integer polynomial helpers (little-endian coefficient lists in z)
# ---------------------------------------------------------------------------

def _zp_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _zp_mul(f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _zp_trim(out)


def _zp_pow(f, e):
    out = [1]
    base = list(f)
    while e:
        if e & 1:
            out = _zp_mul(out, base)
        e >>= 1
        if e:
            base = _zp_mul(base, base)
    return out


def _zp_add_shifted(f, g, shift):
    out = list(f) + [0] * max(0, shift + len(g) - len(f))
    for j, b in enumerate(g):
        out[shift + j] += b
    return _zp_trim(out)


# ---------------------------------------------------------------------------
# Hilbert numerator recursion on minimal monomial generators
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _hilbert_numerator_cached(gens: tuple, nvars: int) -> tuple:
    if not gens:
        return (1,)
    if any(mono_deg(g) == 0 for g in gens):
        return ()
    supports = [tuple(i for i, e in enumerate(g) if e) for g in gens]
    seen: set = set()
    disjoint = True
    for s in supports:
        if any(v in seen for v in s):
            disjoint = False
            break
        seen.update(s)
    if disjoint:
        num = [1]
        for g in gens:
            factor = [0] * (mono_deg(g) + 1)
            factor[0] = 1
            factor[-1] = -1
            num = _zp_mul(num, factor)
        return tuple(num)
    counts = [0] * nvars
    for s in supports:
        for v in s:
            counts[v] += 1
    v = max(range(nvars), key=lambda i: counts[i])
    # I + (x_v): generators without v, plus x_v itself
    ev = tuple(1 if i == v else 0 for i in range(nvars))
    plus = tuple(sorted([g for g in gens if g[v] == 0] + [ev]))
    # I : x_v: decrement v-exponent, re-minimalize
    colon = tuple(sorted(minimal_monomial_generators(
        [g[:v] + (max(0, g[v] - 1),) + g[v + 1:] for g in gens])))
    n_plus = _hilbert_numerator_cached(plus, nvars)
    n_colon = _hilbert_numerator_cached(colon, nvars)
    return tuple(_zp_add_shifted(list(n_plus), list(n_colon), 1))


def hilbert_numerator(gens, nvars: int) -> tuple:
    """Numerator of HS_{R/(gens)} over (1-z)^nvars, gens monomial."""
    gens = tuple(sorted(minimal_monomial_generators(gens)))
    return _hilbert_numerator_cached(gens, nvars)


@dataclass(frozen=True, eq=False)
class HilbertSeries:
    """Exact rational form numerator/(1-z)^denom_exp with integer numerator."""

    numerator: tuple
    denom_exp: int

    def simplified(self):
        """(numerator with all (1-z) factors cancelled, remaining exponent)."""
        num = list(self.numerator)
        exp = self.denom_exp
        while num and sum(num) == 0:
            acc = 0
            quot = []
            for c in num[:-1]:
                acc += c
                quot.append(acc)
            num = _zp_trim(quot)
            exp -= 1
        return tuple(num), exp

    @property
    def is_zero(self) -> bool:
        return not _zp_trim(list(self.numerator))

    @property
    def dimension(self) -> int:
        if self.is_zero:
            raise ImproperIdeal("the zero ring has no Krull dimension here")
        return self.simplified()[1]

    def multiplicity(self) -> int:
        num, _ = self.simplified()
        return sum(num)

    def expand(self, upto: int) -> list[int]:
        """Hilbert function values for degrees 0..upto."""
        coeffs = list(self.numerator) + [0] * max(0, upto + 1 - len(self.numerator))
        coeffs = coeffs[:upto + 1]
        for _ in range(self.denom_exp):
            acc = 0
            for i in range(len(coeffs)):
                acc += coeffs[i]
                coeffs[i] = acc
        return coeffs

    def coefficient(self, j: int) -> int:
        if j < 0:
            return 0
        return self.expand(j)[j]

    def __mul__(self, other: "HilbertSeries") -> "HilbertSeries":
        return HilbertSeries(
            tuple(_zp_mul(list(self.numerator), list(other.numerator))),
            self.denom_exp + other.denom_exp)

    def __pow__(self, e: int) -> "HilbertSeries":
        return HilbertSeries(tuple(_zp_pow(list(self.numerator), e)),
                             self.denom_exp * e)

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        return self.simplified() == other.simplified()

    def __hash__(self):
        return hash(self.simplified())

    def render(self) -> str:
        num = _render_zpoly(self.numerator)
        if self.denom_exp == 0:
            return num
        return f"({num})/(1-z)^{self.denom_exp}"

    __repr__ = render


def _render_zpoly(coeffs) -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
            continue
        z = "z" if i == 1 else f"z^{i}"
        if c == 1:
            term = z
        elif c == -1:
            term = f"-{z}"
        else:
            term = f"{c}*{z}"
        if parts and not term.startswith("-"):
            term = "+" + term
        parts.append(term)
    return "".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# Hilbert function / series / dimension / multiplicity
# ---------------------------------------------------------------------------

def _homogeneous_gb(I, degree_cap: int) -> GroebnerBasis:
    gb = ensure_gb(I, degree_cap)
    if not gb.is_homogeneous():
        raise NotHomogeneous("a homogeneous ideal is required")
    return gb


def hilbert_series(I, degree_cap: int = DEFAULT_DEGREE_CAP) -> HilbertSeries:
    gb = _homogeneous_gb(I, degree_cap)
    num = hilbert_numerator(gb.leading_monomials(), gb.ring.nvars)
    return HilbertSeries(num, gb.ring.nvars)


def hilbert_function(I, d: int, degree_cap: int = DEFAULT_DEGREE_CAP) -> int:
    """dim of the degree-d piece of R/I (count of degree-d standard monomials)."""
    return hilbert_series(I, degree_cap).coefficient(d)


def standard_monomials(in_gens, ring, d: int):
    """Degree-d monomials outside the monomial ideal, degrevlex-descending."""
    return [m for m in ring.monomials_of_degree(d)
            if not any(mono_divides(g, m) for g in in_gens)]


def krull_dimension(I, degree_cap: int = DEFAULT_DEGREE_CAP) -> int:
    return hilbert_series(I, degree_cap).dimension


def multiplicity(I, degree_cap: int = DEFAULT_DEGREE_CAP) -> int:
    hs = hilbert_series(I, degree_cap)
    if hs.is_zero:
        raise ImproperIdeal("multiplicity needs a proper ideal")
    return hs.multiplicity()


def degree_of_regularity(F: PolySystem, degree_cap: int = DEFAULT_DEGREE_CAP) -> int:
    """Least d with vanishing Hilbert function of R/(top parts of F)."""
    nonzero = [f for f in F if not f.is_zero]
    if not nonzero:
        raise NotZeroDimensionalTop("the zero system has no degree of regularity")
    tops = PolySystem(F.ring, [top_part(f) for f in nonzero])
    gb = ensure_gb(tops, degree_cap)
    if gb.is_unit_ideal:
        return 0
    hs = hilbert_series(gb, degree_cap)
    if hs.dimension != 0:
        raise NotZeroDimensionalTop(
            f"top-part quotient has dimension {hs.dimension}")
    num, _ = hs.simplified()
    values = hs.expand(len(num) + 1)
    for d, v in enumerate(values):
        if v == 0:
            return d
    raise AssertionError("Artinian Hilbert function never vanished")


def linear_regular_sequence_check(I, L, degree_cap: int = DEFAULT_DEGREE_CAP) -> bool:
    """True iff HS_{R/(I+L)} = (1-z)^{|L|} HS_{R/I} exactly (L linear forms)."""
    gb = _homogeneous_gb(I, degree_cap)
    forms = list(L)
    for f in forms:
        if f.is_zero or not f.is_homogeneous() or f.degree() != 1:
            raise NotLinear("regular-sequence test needs homogeneous linear forms")
    hs_i = hilbert_series(gb, degree_cap)
    sum_gb = ensure_gb(PolySystem(gb.ring, list(gb.polys) + forms), degree_cap)
    hs_sum = hilbert_series(sum_gb, degree_cap)
    expected = list(hs_i.numerator)
    for _ in forms:
        expected = _zp_mul(expected, [1, -1])
    return _zp_trim(list(hs_sum.numerator)) == _zp_trim(expected)


# ---------------------------------------------------------------------------
# Betti tables
# ---------------------------------------------------------------------------

@dataclass
class BettiTable:
    """Graded Betti numbers beta_{i,j} of a quotient R/I."""

    entries: dict            # (i, j) -> positive int
    nvars: int
    cap: int
    closed: bool = True
    initial: "BettiTable | None" = None

    def beta(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def regularity_quotient(self) -> int:
        if not self.closed:
            raise OpenTable("table is not closed")
        return max((j - i for (i, j) in self.entries), default=0)

    def proj_dim(self) -> int:
        if not self.closed:
            raise OpenTable("table is not closed")
        return max((i for (i, _) in self.entries), default=0)

    def min_generator_count(self) -> int:
        return sum(v for (i, _), v in self.entries.items() if i == 1)

    def generator_degrees(self) -> list[int]:
        out = []
        for (i, j), v in sorted(self.entries.items()):
            if i == 1:
                out.extend([j] * v)
        return out

    def rows(self):
        """Macaulay-style layout: row index j-i, column index i."""
        if not self.entries:
            return []
        maxi = max(i for i, _ in self.entries)
        maxr = max(j - i for i, j in self.entries)
        table = []
        for r in range(maxr + 1):
            table.append([self.entries.get((i, i + r), 0) for i in range(maxi + 1)])
        return table

    def render(self) -> str:
        rows = self.rows()
        if not rows:
            return "(empty table)"
        width = max(len(str(v)) for row in rows for v in row)
        width = max(width, 2)
        ncols = len(rows[0])
        head = "      " + " ".join(f"{i:>{width}}" for i in range(ncols))
        lines = [head]
        for r, row in enumerate(rows):
            cells = " ".join(f"{v:>{width}}" if v else " " * (width - 1) + "." for v in row)
            lines.append(f"{r:>5} " + cells)
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "nvars": self.nvars,
            "cap": self.cap,
            "closed": self.closed,
            "entries": [[i, j, v] for (i, j), v in sorted(self.entries.items())],
        }


# -- monomial ideals: multidegree decomposition ------------------------------

def _lcm_closure(gens, limit: int = 200000):
    """All joins of subsets of gens (the lcm lattice, without the bottom)."""
    current = set(gens)
    frontier = list(current)
    while frontier:
        new = []
        for b in frontier:
            for g in gens:
                j = mono_lcm(b, g)
                if j not in current:
                    current.add(j)
                    new.append(j)
                    if len(current) > limit:
                        raise MemoryError("lcm lattice exceeds the configured limit")
        frontier = new
    return current


def _upper_koszul_faces(b, gens):
    """Faces of the upper Koszul complex of x^b: subsets t of supp(b) with
    x^(b-t) still in the ideal."""
    supp = [i for i, e in enumerate(b) if e]
    faces = []
    for r in range(len(supp) + 1):
        for subset in itertools.combinations(supp, r):
            residual = list(b)
            for v in subset:
                residual[v] -= 1
            rt = tuple(residual)
            if any(mono_divides(g, rt) for g in gens):
                faces.append(subset)
    return faces


def _reduced_homology_dims(faces, field) -> dict:
    """dim of reduced homology in every degree, over the given field.

    The empty complex has no homology; the complex {()} has H~_{-1} = k.
    """
    if not faces:
        return {}
    by_dim: dict[int, list] = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    for d in by_dim:
        by_dim[d].sort()
    index = {d: {f: i for i, f in enumerate(fs)} for d, fs in by_dim.items()}
    dims = sorted(by_dim)
    ranks: dict[int, int] = {}
    one, minus_one = field.from_int(1), field.from_int(-1)
    for d in dims:
        if d - 1 not in by_dim:
            ranks[d] = 0
            continue
        target_index = index[d - 1]
        rows = []
        for f in by_dim[d]:
            row = []
            for pos in range(len(f)):
                sub = f[:pos] + f[pos + 1:]
                row.append((target_index[sub], one if pos % 2 == 0 else minus_one))
            rows.append(sorted(row))
        ranks[d] = _linalg.rank_sparse(rows, len(by_dim[d - 1]), field)
    out = {}
    for d in dims:
        h = len(by_dim[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if h:
            out[d] = h
    return out


def betti_table_monomial(gens, ring) -> BettiTable:
    """Betti table of R/(gens) for a monomial ideal, by multidegree."""
    gens = minimal_monomial_generators(gens)
    if any(mono_deg(g) == 0 for g in gens):
        raise ImproperIdeal("Betti table of the unit ideal is not defined")
    entries = {(0, 0): 1}
    if gens:
        for b in _lcm_closure(gens):
            j = mono_deg(b)
            hdims = _reduced_homology_dims(_upper_koszul_faces(b, gens), ring.field)
            for hdeg, dim in hdims.items():
                i = hdeg + 2
                key = (i, j)
                entries[key] = entries.get(key, 0) + dim
    cap = max(j for _, j in entries)
    return BettiTable(entries, ring.nvars, cap=cap, closed=True)


# -- general homogeneous ideals: Koszul strands ---------------------------------

class _KoszulEngine:
    """Shared caches for strand-by-strand Koszul homology of R/I."""

    def __init__(self, gb: GroebnerBasis):
        self.gb = gb
        self.ring = gb.ring
        self.field = gb.ring.field
        self.ingens = gb.leading_monomials()
        self._std: dict[int, tuple] = {}
        self._mult: dict[int, list] = {}
        self._subsets: dict[int, tuple] = {}
        self._rank: dict[tuple, int] = {}

    def std(self, e: int):
        got = self._std.get(e)
        if got is None:
            if e < 0:
                got = ([], {})
            else:
                monos = standard_monomials(self.ingens, self.ring, e)
                got = (monos, {m: i for i, m in enumerate(monos)})
            self._std[e] = got
        return got

    def subsets(self, i: int):
        got = self._subsets.get(i)
        if got is None:
            if 0 <= i <= self.ring.nvars:
                combos = list(itertools.combinations(range(self.ring.nvars), i))
            else:
                combos = []
            got = (combos, {S: k for k, S in enumerate(combos)})
            self._subsets[i] = got
        return got

    def mult_maps(self, e: int):
        """For each variable l: column vectors of multiply-then-reduce from
        standard monomials of degree e to degree e+1."""
        got = self._mult.get(e)
        if got is None:
            monos, _ = self.std(e)
            _, hi_index = self.std(e + 1)
            per_var = []
            for l in range(self.ring.nvars):
                col = []
                for u in monos:
                    shifted = u[:l] + (u[l] + 1,) + u[l + 1:]
                    if shifted in hi_index:
                        col.append([(hi_index[shifted], 1)])
                    else:
                        nf = normal_form(
                            self.ring.from_code_dict({shifted: 1}), self.gb)
                        col.append([(hi_index[m], c) for m, c in nf.terms])
                per_var.append(col)
            self._mult[e] = per_var
            got = per_var
        return got

    def strand_dim(self, i: int, j: int) -> int:
        subs, _ = self.subsets(i)
        monos, _ = self.std(j - i)
        return len(subs) * len(monos)

    def rank(self, i: int, j: int) -> int:
        """Rank of the Koszul differential (K_i tensor A)_j -> (K_{i-1} tensor A)_j."""
        key = (i, j)
        got = self._rank.get(key)
        if got is not None:
            return got
        if i < 1 or i > self.ring.nvars:
            self._rank[key] = 0
            return 0
        dom_subs, _ = self.subsets(i)
        cod_subs, cod_index = self.subsets(i - 1)
        lo_monos, _ = self.std(j - i)
        hi_monos, _ = self.std(j - i + 1)
        if not dom_subs or not lo_monos or not cod_subs or not hi_monos:
            self._rank[key] = 0
            return 0
        mult = self.mult_maps(j - i)
        width = len(hi_monos)
        neg = self.field.neg
        rows = []
        for S in dom_subs:
            for u_idx in range(len(lo_monos)):
                row = []
                for pos, l in enumerate(S):
                    T = S[:pos] + S[pos + 1:]
                    base = cod_index[T] * width
                    if pos % 2 == 0:
                        row.extend((base + v, c) for v, c in mult[l][u_idx])
                    else:
                        row.extend((base + v, neg(c)) for v, c in mult[l][u_idx])
                rows.append(sorted(row))
        r = _linalg.rank_sparse(rows, len(cod_subs) * width, self.field)
        self._rank[key] = r
        return r

    def beta(self, i: int, j: int) -> int:
        if i == 0:
            return 1 if j == 0 else 0
        dim = self.strand_dim(i, j)
        if dim == 0:
            return 0
        return dim - self.rank(i, j) - self.rank(i + 1, j)


def betti_table(I, cap: int | None = None,
                degree_cap: int = DEFAULT_DEGREE_CAP,
                force_strands: bool = False) -> BettiTable:
    """Graded Betti numbers of R/I for homogeneous I.

    The table of the initial ideal bounds the true table cellwise, so its
    nonzero cells form the (rigorous) candidate window for the strand
    computation.  ``cap`` bounds the internal degree j; when it cuts the
    window short the computation refuses with CapTooSmall instead of
    returning a truncated table.  The alternating-sum identity against the
    Hilbert series is checked on every strand before returning.
    """
    gb = _homogeneous_gb(I, degree_cap)
    ring = gb.ring
    if gb.is_unit_ideal:
        raise ImproperIdeal("Betti table of the unit ideal is not defined")
    ingens = gb.leading_monomials()
    in_table = betti_table_monomial(ingens, ring)
    required = max(j for _, j in in_table.entries)
    if cap is not None and cap < required:
        raise CapTooSmall(cap, required)
    used_cap = cap if cap is not None else in_table.regularity_quotient() + ring.nvars + 1

    if not force_strands and all(len(g.terms) == 1 for g in gb):
        in_table.cap = used_cap
        in_table.initial = None
        return in_table

    engine = _KoszulEngine(gb)
    entries = {}
    for (i, j) in sorted(in_table.entries):
        v = engine.beta(i, j)
        if v:
            entries[(i, j)] = v
    table = BettiTable(entries, ring.nvars, cap=used_cap, closed=True,
                       initial=in_table)
    _check_alternating_sum(table, ingens, ring)
    return table


def _check_alternating_sum(table: BettiTable, ingens, ring):
    num = hilbert_numerator(ingens, ring.nvars)
    degrees = sorted({j for _, j in table.entries})
    for j in degrees:
        total = sum((-1) ** i * table.beta(i, j) for i in range(ring.nvars + 1))
        expected = num[j] if j < len(num) else 0
        if total != expected:
            raise AssertionError(
                f"Betti/Hilbert alternating-sum mismatch at degree {j}: "
                f"{total} != {expected}")


# ---------------------------------------------------------------------------
# derived homological invariants
# ---------------------------------------------------------------------------

@dataclass
class HomologicalReport:
    dimension: int
    height: int
    reg_quotient: int
    reg_ideal: int | None
    reg_initial_quotient: int | None
    proj_dim: int
    min_generators: int
    is_cohen_macaulay: bool
    is_complete_intersection: bool
    betti: BettiTable = dc_field(repr=False, default=None)


def derive_homological_invariants(B: BettiTable, I,
                                  degree_cap: int = DEFAULT_DEGREE_CAP) -> HomologicalReport:
    """Regularity, projective dimension, CM and CI predicates from a table."""
    if not B.closed:
        raise OpenTable("cannot derive invariants from an open table")
    gb = _homogeneous_gb(I, degree_cap)
    dim = krull_dimension(gb, degree_cap)
    m = B.nvars
    height = m - dim
    reg_q = B.regularity_quotient()
    pd = B.proj_dim()
    ngens = B.min_generator_count()
    return HomologicalReport(
        dimension=dim,
        height=height,
        reg_quotient=reg_q,
        reg_ideal=reg_q + 1 if ngens > 0 else None,
        reg_initial_quotient=(B.initial.regularity_quotient()
                              if B.initial is not None else None),
        proj_dim=pd,
        min_generators=ngens,
        is_cohen_macaulay=(pd == height),
        is_complete_intersection=(ngens == height),
        betti=B,
    )


def regularity_of_ideal(I, degree_cap: int = DEFAULT_DEGREE_CAP) -> int:
    """reg(I) = reg(R/I) + 1 for a nonzero proper homogeneous ideal."""
    table = betti_table(I, degree_cap=degree_cap)
    if table.min_generator_count() == 0:
        raise ZeroPolynomial("the zero ideal has no generator degrees")
    return table.regularity_quotient() + 1
