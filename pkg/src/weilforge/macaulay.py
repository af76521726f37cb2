"""Macaulay matrices, exact elimination, and solving-degree measurement.

The matrix M_{<=d} of a system has one column per monomial of degree <= d
(degrevlex-decreasing left to right) and one row per product
shift * generator of degree <= d.  The solving degree is the least d at
which the polynomials read off the reduced row echelon form of M_{<=d}
are a Groebner basis of the ideal; since the extracted rows always lie in
the ideal, that reduces to their leading monomials covering the minimal
generators of the initial ideal (supplied by the Buchberger oracle).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field

from . import _linalg
from .errors import CapExceeded, EmptyMatrix, NotHomogeneous
from .groebner import DEFAULT_DEGREE_CAP, ensure_gb
from .ring import Polynomial, PolySystem, mono_deg, mono_divides


@dataclass
class MacaulayMatrix:
    """Sparse degree-<= d Macaulay matrix with its column index."""

    system: PolySystem
    degree: int
    columns: tuple            # monomials, degrevlex-descending
    rows: tuple               # (generator index, shift monomial)
    entries: tuple            # per row: sorted (column, code) list

    @property
    def ring(self):
        return self.system.ring

    @property
    def shape(self):
        return (len(self.rows), len(self.columns))

    def dump(self) -> str:
        """Sparse triplet text: header 'd m q', then 'row col value' lines.

        d is the degree bound, m the variable count, q the field order;
        values are integer element codes.
        """
        ring = self.system.ring
        lines = [f"{self.degree} {ring.nvars} {ring.field.order}"]
        for i, row in enumerate(self.entries):
            for col, code in row:
                lines.append(f"{i} {col} {code}")
        return "\n".join(lines) + "\n"


def build_macaulay(F: PolySystem, d: int, exact_degree: bool = False) -> MacaulayMatrix:
    """Construct M_{<=d} (or the degree-exactly-d block when exact_degree).

    Rows are generator-major, shifts degrevlex-descending; generators of
    degree above d contribute nothing.  Raises EmptyMatrix when no
    generator fits.
    """
    if d < 1:
        raise ValueError("degree bound must be >= 1")
    ring = F.ring
    if exact_degree:
        columns = tuple(ring.monomials_of_degree(d))
    else:
        columns = tuple(ring.monomials_up_to(d))
    col_index = {m: i for i, m in enumerate(columns)}
    rows = []
    entries = []
    for j, f in enumerate(F):
        if f.is_zero:
            continue
        deg = f.degree()
        if deg > d:
            continue
        if exact_degree:
            if not f.is_homogeneous():
                raise NotHomogeneous("exact-degree blocks need homogeneous generators")
            shifts = ring.monomials_of_degree(d - deg)
        else:
            shifts = ring.monomials_up_to(d - deg)
        for shift in shifts:
            prod = f.term_mul(shift, 1)
            rows.append((j, shift))
            entries.append(sorted((col_index[m], c) for m, c in prod.terms))
    if not rows:
        raise EmptyMatrix(f"no generator has degree <= {d}")
    return MacaulayMatrix(F, d, columns, tuple(rows), tuple(entries))


@dataclass
class EliminationResult:
    """Canonical reduced row echelon form of a Macaulay matrix."""

    rank: int
    pivot_columns: list
    rows: list                # canonical sparse rows, pivot-ascending
    polynomials: list         # nonzero row polynomials, same order
    nrows: int
    ncols: int
    elapsed_ms: float

    def pivot_monomials(self, matrix: MacaulayMatrix):
        return [matrix.columns[c] for c in self.pivot_columns]


def rref(M: MacaulayMatrix, threads: int = 1) -> EliminationResult:
    """Reduced row echelon form; unique given the column order."""
    ring = M.system.ring
    start = time.perf_counter()
    pivot_cols, rows, rank = _linalg.rref_sparse(
        M.entries, len(M.columns), ring.field, threads=threads)
    elapsed = (time.perf_counter() - start) * 1000.0
    polynomials = [
        ring.from_code_dict({M.columns[c]: v for c, v in row})
        for row in rows
    ]
    return EliminationResult(
        rank=rank,
        pivot_columns=pivot_cols,
        rows=rows,
        polynomials=polynomials,
        nrows=len(M.rows),
        ncols=len(M.columns),
        elapsed_ms=elapsed,
    )


@dataclass
class TraceRow:
    d: int
    rows: int
    cols: int
    rank: int
    elapsed_ms: float
    is_gb: bool

    def csv(self) -> str:
        return f"{self.d},{self.rows},{self.cols},{self.rank},{self.elapsed_ms:.3f},{str(self.is_gb).lower()}"


@dataclass
class SolvingDegreeResult:
    degree: int
    trace: list
    final: EliminationResult | None = None
    oracle_generators: list = dc_field(default_factory=list)

    def trace_csv(self) -> str:
        lines = ["d,rows,cols,rank,elapsed_ms,is_gb"]
        lines.extend(row.csv() for row in self.trace)
        return "\n".join(lines) + "\n"


def _covers(pivot_monos, target_monos) -> bool:
    return all(
        any(mono_divides(lm, t) for lm in pivot_monos)
        for t in target_monos
    )


def solving_degree(F: PolySystem, d_max: int = DEFAULT_DEGREE_CAP,
                   exact_blocks: bool = False, threads: int = 1,
                   oracle_cap: int = DEFAULT_DEGREE_CAP) -> SolvingDegreeResult:
    """Least d such that elimination on M_{<=d} yields a Groebner basis.

    ``exact_blocks`` switches homogeneous systems to per-degree blocks
    (block-diagonal elimination); the reported trace then accumulates
    block sizes, which match the <=d matrix exactly.
    """
    nonzero = F.nonzero()
    if not len(nonzero):
        raise ValueError("the zero system has no solving degree")
    if exact_blocks and not nonzero.is_homogeneous():
        raise NotHomogeneous("exact-degree blocks need a homogeneous system")
    oracle = ensure_gb(nonzero, oracle_cap)
    targets = oracle.leading_monomials()
    d_min = min(f.degree() for f in nonzero)
    trace = []
    covered_monos: list = []
    acc_rows = acc_cols = acc_rank = 0
    acc_ms = 0.0
    n_low = len(nonzero.ring.monomials_up_to(d_min - 1)) if d_min >= 1 else 0
    for d in range(d_min, d_max + 1):
        if exact_blocks:
            try:
                M = build_macaulay(nonzero, d, exact_degree=True)
                res = rref(M, threads=threads)
                covered_monos.extend(res.pivot_monomials(M))
                acc_rows += res.nrows
                acc_cols += res.ncols
                acc_rank += res.rank
                acc_ms += res.elapsed_ms
            except EmptyMatrix:
                acc_cols += len(nonzero.ring.monomials_of_degree(d))
            # accumulated blocks represent M_{<=d} (plus untouched low columns)
            rows_rep, cols_rep, rank_rep = acc_rows, acc_cols + n_low, acc_rank
            ms_rep = acc_ms
            final = None
        else:
            try:
                M = build_macaulay(nonzero, d)
            except EmptyMatrix:
                trace.append(TraceRow(d, 0, len(nonzero.ring.monomials_up_to(d)),
                                      0, 0.0, False))
                continue
            res = rref(M, threads=threads)
            covered_monos = res.pivot_monomials(M)
            rows_rep, cols_rep, rank_rep = res.nrows, res.ncols, res.rank
            ms_rep = res.elapsed_ms
            final = res
        ok = _covers(covered_monos, targets)
        trace.append(TraceRow(d, rows_rep, cols_rep, rank_rep, ms_rep, ok))
        if ok:
            return SolvingDegreeResult(d, trace, final, targets)
    raise CapExceeded(d_max, trace)
