"""Brute-force oracles, deliberately independent of the package under test.

Cochains are evaluated pointwise from the textbook coboundary formulas and
ranks come from a self-contained elimination routine.  Nothing here imports
cotorlab; the main library is checked against these values, never the other
way around.

Conventions: a matrix is a list of rows; scalars are ints (reduced mod p when
p is given) or Fractions (p=None means the rationals).
"""

from fractions import Fraction


def _inv_mod(a, p):
    return pow(a % p, p - 2, p)


def oracle_rank(rows, p):
    """Rank by plain forward elimination.  Destroys its own copy of rows."""
    if not rows or not rows[0]:
        return 0
    m = [list(r) for r in rows]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pivval = m[rank][col]
        for r in range(rank + 1, nrows):
            if m[r][col] == 0:
                continue
            if p is None:
                factor = Fraction(m[r][col], 1) / Fraction(pivval, 1)
                m[r] = [m[r][j] - factor * m[rank][j] for j in range(ncols)]
            else:
                factor = (m[r][col] * _inv_mod(pivval, p)) % p
                m[r] = [(m[r][j] - factor * m[rank][j]) % p for j in range(ncols)]
        rank += 1
        if rank == nrows:
            break
    return rank


def _tuples(dim, n):
    if n == 0:
        return [()]
    shorter = _tuples(dim, n - 1)
    return [t + (i,) for t in shorter for i in range(dim)]


def bar_differential(mul, left, right, dim_a, dim_b, n, p):
    """Matrix of d^n : C^n(A,B) -> C^{n+1}(A,B), evaluated pointwise.

    A cochain basis element is (t, beta): the map sending the basis tensor
    e_t to b_beta and all other basis tensors to zero.  Rows are indexed by
    (input tuple s of length n+1, output coordinate gamma).
    """
    dom = [(t, b) for t in _tuples(dim_a, n) for b in range(dim_b)]
    inputs = _tuples(dim_a, n + 1)
    rows = []
    for s in inputs:
        for gamma in range(dim_b):
            row = []
            for (t, beta) in dom:
                val = 0
                # a_1 . f(a_2, ..., a_{n+1})
                if s[1:] == t:
                    val += left[s[0]][gamma][beta]
                # (-1)^i f(..., a_i a_{i+1}, ...)
                for i in range(1, n + 1):
                    if gamma == beta:
                        merged_ok = s[: i - 1] == t[: i - 1] and s[i + 1 :] == t[i:]
                        if merged_ok:
                            coeff = mul[s[i - 1]][s[i]][t[i - 1]]
                            val += (-1) ** i * coeff
                # (-1)^{n+1} f(a_1, ..., a_n) . a_{n+1}
                if s[:-1] == t:
                    val += (-1) ** (n + 1) * right[s[n]][gamma][beta]
                row.append(val % p if p is not None else Fraction(val))
            rows.append(row)
    return rows


def hochschild_dims_bruteforce(mul, left, right, dim_a, dim_b, n_max, p):
    ranks = [oracle_rank(bar_differential(mul, left, right, dim_a, dim_b, n, p), p)
             for n in range(n_max + 1)]
    dims = []
    for n in range(n_max + 1):
        space = dim_b * dim_a ** n
        below = ranks[n - 1] if n > 0 else 0
        dims.append(space - ranks[n] - below)
    return dims


def cobar_differential(comul, rho, lam, dim_c, dim_m, dim_n, n, p):
    """Matrix of d^n : M (x) C^n (x) N -> M (x) C^{n+1} (x) N.

    rho[m][m2][k]: right coaction of M; lam[m][k][m2]: left coaction of N.
    Basis of the degree-n space: (mu, k_1..k_n, nu), evaluated cofacewise.
    """
    dom = [(mu,) + t + (nu,)
           for mu in range(dim_m) for t in _tuples(dim_c, n) for nu in range(dim_n)]
    cod = [(mu,) + t + (nu,)
           for mu in range(dim_m) for t in _tuples(dim_c, n + 1) for nu in range(dim_n)]
    index = {b: i for i, b in enumerate(cod)}
    cols = []
    for (mu, *mid, nu) in dom:
        mid = tuple(mid)
        col = [0] * len(cod)
        for m2 in range(dim_m):
            for k in range(dim_c):
                if rho[mu][m2][k]:
                    col[index[(m2, k) + mid + (nu,)]] += rho[mu][m2][k]
        for i in range(1, n + 1):
            ki = mid[i - 1]
            for a in range(dim_c):
                for b in range(dim_c):
                    if comul[ki][a][b]:
                        new = mid[: i - 1] + (a, b) + mid[i:]
                        col[index[(mu,) + new + (nu,)]] += (-1) ** i * comul[ki][a][b]
        for k in range(dim_c):
            for n2 in range(dim_n):
                if lam[nu][k][n2]:
                    col[index[(mu,) + mid + (k, n2)]] += (-1) ** (n + 1) * lam[nu][k][n2]
        cols.append(col)
    rows = [[cols[j][i] for j in range(len(dom))] for i in range(len(cod))]
    if p is not None:
        rows = [[v % p for v in row] for row in rows]
    else:
        rows = [[Fraction(v) for v in row] for row in rows]
    return rows


def cotor_dims_bruteforce(comul, rho, lam, dim_c, dim_m, dim_n, n_max, p):
    ranks = [oracle_rank(cobar_differential(comul, rho, lam, dim_c, dim_m, dim_n, n, p), p)
             for n in range(n_max + 1)]
    dims = []
    for n in range(n_max + 1):
        space = dim_m * dim_c ** n * dim_n
        below = ranks[n - 1] if n > 0 else 0
        dims.append(space - ranks[n] - below)
    return dims
