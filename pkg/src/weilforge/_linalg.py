"""Exact elimination kernels over finite fields.

Three representations, picked per coefficient field:

  * GF(2): rows are Python ints used as bitsets.  Bit (ncols-1-c) holds
    column c, so the leftmost column is the highest bit and pivot search
    is ``int.bit_length()``.
  * prime fields: dense numpy int64 matrices with vectorized mod-p updates.
  * small extension fields (order <= 256): dense numpy uint8 code matrices
    driven by cached addition/subtraction/multiplication tables.
  * anything else: sparse dict rows in pure Python (slow path, always
    available).

All RREF routines return the unique reduced row echelon form of the row
space under the fixed column order, so results are independent of row
order and thread count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .fields import ExtensionField, PrimeField

_TABLE_CACHE: dict = {}
_TABLED_LIMIT = 256


def _field_tables(field):
    tabs = _TABLE_CACHE.get(field)
    if tabs is None:
        q = field.order
        add = np.zeros((q, q), dtype=np.uint8)
        sub = np.zeros((q, q), dtype=np.uint8)
        mul = np.zeros((q, q), dtype=np.uint8)
        for a in range(q):
            for b in range(q):
                add[a, b] = field.add(a, b)
                sub[a, b] = field.sub(a, b)
                mul[a, b] = field.mul(a, b)
        inv = np.zeros(q, dtype=np.uint8)
        for a in range(1, q):
            inv[a] = field.inv(a)
        tabs = (add, sub, mul, inv)
        _TABLE_CACHE[field] = tabs
    return tabs


def kernel_kind(field) -> str:
    if field.order == 2:
        return "gf2"
    if isinstance(field, PrimeField):
        return "prime"
    if isinstance(field, ExtensionField) and field.order <= _TABLED_LIMIT:
        return "tabled"
    return "python"


# ---------------------------------------------------------------------------
# GF(2) bitset kernel
# ---------------------------------------------------------------------------

def pack_gf2(rows_sparse, ncols: int) -> list[int]:
    packed = []
    top = ncols - 1
    for row in rows_sparse:
        acc = 0
        for col, code in row:
            if code & 1:
                acc ^= 1 << (top - col)
        packed.append(acc)
    return packed


def rref_gf2(packed: list[int], ncols: int, threads: int = 1):
    """Returns (pivot column list, pivot rows as ints, rank)."""
    pivots: dict[int, int] = {}  # leading bit -> row
    for row in packed:
        while row:
            b = row.bit_length() - 1
            piv = pivots.get(b)
            if piv is None:
                pivots[b] = row
                break
            row ^= piv
    # back-substitution, ascending bit position; see module docstring
    bits = sorted(pivots)
    for b in bits:
        rb = pivots[b]
        others = [b2 for b2 in pivots if b2 != b and (pivots[b2] >> b) & 1]
        if not others:
            continue
        if threads > 1 and len(others) > 64:
            chunks = [others[i::threads] for i in range(threads)]

            def apply(chunk):
                for b2 in chunk:
                    pivots[b2] ^= rb

            with ThreadPoolExecutor(max_workers=threads) as pool:
                list(pool.map(apply, chunks))
        else:
            for b2 in others:
                pivots[b2] ^= rb
    top = ncols - 1
    pivot_cols = sorted(top - b for b in pivots)
    rows = [pivots[top - c] for c in pivot_cols]
    return pivot_cols, rows, len(rows)


def rank_gf2(packed: list[int]) -> int:
    pivots: dict[int, int] = {}
    for row in packed:
        while row:
            b = row.bit_length() - 1
            piv = pivots.get(b)
            if piv is None:
                pivots[b] = row
                break
            row ^= piv
    return len(pivots)


def unpack_gf2(rows: list[int], ncols: int):
    top = ncols - 1
    out = []
    for r in rows:
        entries = []
        while r:
            b = r.bit_length() - 1
            entries.append((top - b, 1))
            r ^= 1 << b
        out.append(entries)
    return out


# ---------------------------------------------------------------------------
# dense numpy kernels
# ---------------------------------------------------------------------------

def to_dense(rows_sparse, ncols: int, dtype):
    M = np.zeros((len(rows_sparse), ncols), dtype=dtype)
    for i, row in enumerate(rows_sparse):
        for col, code in row:
            M[i, col] = code
    return M


def rref_prime(M: np.ndarray, p: int):
    """In-place RREF of an integer matrix mod p; returns (pivot cols, rank)."""
    small = p <= 13
    pp = p * p
    nrows, ncols = M.shape
    r = 0
    pivot_cols = []
    for col in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(M[r:, col])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        inv = pow(int(M[r, col]), p - 2, p)
        if small:
            if inv != 1:
                M[r] = ((M[r].astype(np.uint16) * inv) % p).astype(M.dtype)
        else:
            M[r] = (M[r] * inv) % p
        other = np.nonzero(M[:, col])[0]
        other = other[other != r]
        if other.size:
            if small:
                prod = M[other, col][:, None] * M[r][None, :]
                M[other] = (M[other] + (pp - prod)) % p
            else:
                M[other] = (M[other] - np.outer(M[other, col], M[r])) % p
        pivot_cols.append(col)
        r += 1
    return pivot_cols, r


def rank_prime(M: np.ndarray, p: int) -> int:
    if p <= 13:
        if M.dtype != np.uint8:
            M = M.astype(np.uint8)
        return _rank_prime_u8(M, p)
    nrows, ncols = M.shape
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(M[r:, col])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        inv = pow(int(M[r, col]), p - 2, p)
        M[r] = (M[r] * inv) % p
        below = r + 1 + np.nonzero(M[r + 1:, col])[0]
        if below.size:
            M[below] = (M[below] - np.outer(M[below, col], M[r])) % p
        r += 1
    return r


def _rank_prime_u8(M: np.ndarray, p: int) -> int:
    """Forward elimination mod a small prime in uint8.

    With p <= 13 the update a + (p^2 - f*v) stays below 256, so the whole
    rank-1 step runs in uint8 (an 8x cut in memory traffic over int64).
    """
    nrows, ncols = M.shape
    pp = p * p
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        colvals = M[r:, col]
        nz = np.nonzero(colvals)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        inv = pow(int(M[r, col]), p - 2, p)
        if inv != 1:
            row = M[r].astype(np.uint16)
            M[r] = ((row * inv) % p).astype(np.uint8)
        below = r + 1 + np.nonzero(M[r + 1:, col])[0]
        if below.size:
            prod = M[below, col][:, None] * M[r][None, :]
            M[below] = (M[below] + (pp - prod)) % p
        r += 1
    return r


def rref_tabled(M: np.ndarray, field):
    """RREF of a uint8 code matrix using cached field tables."""
    add, sub, mul, inv = _field_tables(field)
    nrows, ncols = M.shape
    r = 0
    pivot_cols = []
    for col in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(M[r:, col])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        M[r] = mul[int(inv[M[r, col]])][M[r]]
        other = np.nonzero(M[:, col])[0]
        other = other[other != r]
        if other.size:
            prod = mul[M[other, col][:, None], M[r][None, :]]
            M[other] = sub[M[other], prod]
        pivot_cols.append(col)
        r += 1
    return pivot_cols, r


def rank_tabled(M: np.ndarray, field) -> int:
    add, sub, mul, inv = _field_tables(field)
    nrows, ncols = M.shape
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(M[r:, col])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        M[r] = mul[int(inv[M[r, col]])][M[r]]
        below = r + 1 + np.nonzero(M[r + 1:, col])[0]
        if below.size:
            prod = mul[M[below, col][:, None], M[r][None, :]]
            M[below] = sub[M[below], prod]
        r += 1
    return r


# ---------------------------------------------------------------------------
# generic sparse kernel
# ---------------------------------------------------------------------------

def rref_python(rows_sparse, ncols: int, field, threads: int = 1):
    pivots: dict[int, dict] = {}  # pivot col -> row dict (monic at pivot)
    for row in rows_sparse:
        work = {c: v for c, v in row if v}
        while work:
            lead = min(work)
            piv = pivots.get(lead)
            if piv is None:
                inv = field.inv(work[lead])
                pivots[lead] = {c: field.mul(v, inv) for c, v in work.items()}
                break
            factor = work[lead]
            for c, v in piv.items():
                nv = field.sub(work.get(c, 0), field.mul(factor, v))
                if nv:
                    work[c] = nv
                else:
                    work.pop(c, None)
    for col in sorted(pivots, reverse=True):
        rb = pivots[col]
        for col2, row2 in pivots.items():
            if col2 == col:
                continue
            factor = row2.get(col, 0)
            if factor:
                for c, v in rb.items():
                    nv = field.sub(row2.get(c, 0), field.mul(factor, v))
                    if nv:
                        row2[c] = nv
                    else:
                        row2.pop(c, None)
    pivot_cols = sorted(pivots)
    rows = [sorted(pivots[c].items()) for c in pivot_cols]
    return pivot_cols, rows, len(rows)


def rank_python(rows_sparse, ncols: int, field) -> int:
    pivots: dict[int, dict] = {}
    for row in rows_sparse:
        work = {c: v for c, v in row if v}
        while work:
            lead = min(work)
            piv = pivots.get(lead)
            if piv is None:
                inv = field.inv(work[lead])
                pivots[lead] = {c: field.mul(v, inv) for c, v in work.items()}
                break
            factor = work.pop(lead)
            for c, v in piv.items():
                if c == lead:
                    continue
                nv = field.sub(work.get(c, 0), field.mul(factor, v))
                if nv:
                    work[c] = nv
                else:
                    work.pop(c, None)
    return len(pivots)


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

def rref_sparse(rows_sparse, ncols: int, field, threads: int = 1):
    """RREF of sparse rows; returns (pivot cols, canonical sparse rows, rank).

    Rows come back sorted by pivot column (ascending), each row a sorted
    (column, code) list with a 1 in its pivot column.
    """
    kind = kernel_kind(field)
    if kind == "gf2":
        pivot_cols, rows, rank = rref_gf2(pack_gf2(rows_sparse, ncols), ncols, threads)
        return pivot_cols, unpack_gf2(rows, ncols), rank
    if kind == "prime":
        dtype = np.uint8 if field.p <= 13 else np.int64
        M = to_dense(rows_sparse, ncols, dtype)
        pivot_cols, rank = rref_prime(M, field.p)
        rows = [
            [(int(c), int(M[i, c])) for c in np.nonzero(M[i])[0]]
            for i in range(rank)
        ]
        return pivot_cols, rows, rank
    if kind == "tabled":
        M = to_dense(rows_sparse, ncols, np.uint8)
        pivot_cols, rank = rref_tabled(M, field)
        rows = [
            [(int(c), int(M[i, c])) for c in np.nonzero(M[i])[0]]
            for i in range(rank)
        ]
        return pivot_cols, rows, rank
    return rref_python(rows_sparse, ncols, field, threads)


def rank_sparse(rows_sparse, ncols: int, field) -> int:
    kind = kernel_kind(field)
    if kind == "gf2":
        return rank_gf2(pack_gf2(rows_sparse, ncols))
    if kind == "prime":
        dtype = np.uint8 if field.p <= 13 else np.int64
        return rank_prime(to_dense(rows_sparse, ncols, dtype), field.p)
    if kind == "tabled":
        return rank_tabled(to_dense(rows_sparse, ncols, np.uint8), field)
    return rank_python(rows_sparse, ncols, field)
