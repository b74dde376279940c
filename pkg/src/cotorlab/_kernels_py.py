"""Pure-Python elimination kernels.

Reference implementations of the hot routines: exact Gaussian elimination,
reduced row echelon form and sparse-aware matrix products over F_p and Q.
`cotorlab._ckernels` is the compiled twin with the same signatures; the
dispatch in `cotorlab.kernels` picks whichever is available.

Matrices are flat row-major lists.  F_p entries are ints in [0, p); Q entries
are ints or Fractions (mixing is fine, arithmetic promotes as needed).
"""

from fractions import Fraction
from math import gcd


def fp_rank(flat, m, n, p):
    """Rank over F_p by forward elimination with first-nonzero pivoting."""
    if m == 0 or n == 0:
        return 0
    rows = [list(flat[i * n:(i + 1) * n]) for i in range(m)]
    rank = 0
    for col in range(n):
        piv = -1
        for r in range(rank, m):
            if rows[r][col]:
                piv = r
                break
        if piv < 0:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        inv = pow(prow[col], p - 2, p)
        for r in range(rank + 1, m):
            row = rows[r]
            if not row[col]:
                continue
            f = (row[col] * inv) % p
            for j in range(col, n):
                if prow[j]:
                    row[j] = (row[j] - f * prow[j]) % p
        rank += 1
        if rank == m:
            break
    return rank


def fp_rref(flat, m, n, p):
    """Reduced row echelon form over F_p; returns (flat entries, pivot cols)."""
    rows = [list(flat[i * n:(i + 1) * n]) for i in range(m)]
    pivots = []
    rank = 0
    for col in range(n):
        piv = -1
        for r in range(rank, m):
            if rows[r][col]:
                piv = r
                break
        if piv < 0:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        inv = pow(prow[col], p - 2, p)
        for j in range(col, n):
            prow[j] = (prow[j] * inv) % p
        for r in range(m):
            if r == rank:
                continue
            row = rows[r]
            if not row[col]:
                continue
            f = row[col]
            for j in range(col, n):
                if prow[j]:
                    row[j] = (row[j] - f * prow[j]) % p
        pivots.append(col)
        rank += 1
        if rank == m:
            break
    return [v for row in rows for v in row], pivots


def fp_matmul(a, m, k, b, n, p):
    """(m x k) times (k x n) over F_p, skipping zero entries of both factors."""
    out = [0] * (m * n)
    for i in range(m):
        arow = a[i * k:(i + 1) * k]
        orow_base = i * n
        for t in range(k):
            av = arow[t]
            if not av:
                continue
            brow_base = t * n
            for j in range(n):
                bv = b[brow_base + j]
                if bv:
                    out[orow_base + j] = (out[orow_base + j] + av * bv) % p
    return out


def _integerize(row):
    """Scale a row of ints/Fractions to coprime integers (rank-preserving)."""
    lcm = 1
    for v in row:
        if isinstance(v, Fraction):
            d = v.denominator
            lcm = lcm // gcd(lcm, d) * d
    ints = [int(v * lcm) if isinstance(v, Fraction) else v * lcm for v in row]
    g = 0
    for v in ints:
        g = gcd(g, v)
        if g == 1:
            return ints
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def q_rank(flat, m, n):
    """Rank over Q.

    Rows are scaled to coprime integer vectors (row scaling never changes
    rank), then eliminated column by column keeping integer entries:
    cross-multiplication followed by a gcd renormalization.  The pivot row is
    the sparsest candidate, which keeps fill-in and entry growth tame on the
    structured matrices this library produces.
    """
    if m == 0 or n == 0:
        return 0
    rows = []
    for i in range(m):
        r = _integerize(flat[i * n:(i + 1) * n])
        if any(r):
            rows.append(r)
    rank = 0
    for col in range(n):
        cand = [idx for idx in range(rank, len(rows)) if rows[idx][col]]
        if not cand:
            continue
        piv = min(cand, key=lambda idx: (sum(1 for v in rows[idx] if v), idx))
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        pv = prow[col]
        for idx in range(rank + 1, len(rows)):
            row = rows[idx]
            rv = row[col]
            if not rv:
                continue
            g = 0
            for j in range(col, n):
                row[j] = pv * row[j] - rv * prow[j]
                g = gcd(g, row[j])
            if g > 1:
                for j in range(col, n):
                    row[j] //= g
        rank += 1
        if rank == len(rows):
            break
    return rank


def q_rref(flat, m, n):
    """Reduced row echelon form over Q with Fraction arithmetic."""
    rows = [[Fraction(v) if not isinstance(v, Fraction) else v
             for v in flat[i * n:(i + 1) * n]] for i in range(m)]
    pivots = []
    rank = 0
    for col in range(n):
        piv = -1
        for r in range(rank, m):
            if rows[r][col]:
                piv = r
                break
        if piv < 0:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        pv = prow[col]
        for j in range(col, n):
            prow[j] = prow[j] / pv
        for r in range(m):
            if r == rank:
                continue
            row = rows[r]
            f = row[col]
            if not f:
                continue
            for j in range(col, n):
                if prow[j]:
                    row[j] = row[j] - f * prow[j]
        pivots.append(col)
        rank += 1
        if rank == m:
            break
    return [v for row in rows for v in row], pivots


def q_matmul(a, m, k, b, n):
    """(m x k) times (k x n) with exact int/Fraction arithmetic."""
    out = [0] * (m * n)
    for i in range(m):
        arow = a[i * k:(i + 1) * k]
        base = i * n
        for t in range(k):
            av = arow[t]
            if not av:
                continue
            brow = t * n
            for j in range(n):
                bv = b[brow + j]
                if bv:
                    out[base + j] = out[base + j] + av * bv
    return out
