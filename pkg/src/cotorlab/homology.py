"""Cotensor products, Hochschild cohomology, and the two-pipeline cross-check.

The cotensor product of comodules M, N is the kernel of

    phi(m (x) n) = Delta_M(m) (x) n - m (x) Delta_N(n),

and its bimodule counterpart phi_B(b) = sum_i (e_i b - b e_i) (x) e_i* cuts
out {b : ab = ba}, the degree-0 Hochschild cohomology.  Higher degrees come
from two explicit complexes computed completely independently of each other:
the bar complex Hom(A^(x)n, B) with the standard coboundary

    (df)(a_1..a_{n+1}) = a_1 f(a_2..) + sum_i (-1)^i f(.., a_i a_{i+1}, ..)
                         + (-1)^{n+1} f(a_1..a_n) a_{n+1}

and the cobar complex M -> M(x)C(x)N -> M(x)C(x)C(x)N -> ... whose
differential is the alternating sum of coaction/comultiplication insertions.
compare_cotor_hochschild runs both pipelines and reports degreewise equality.

A complex built to max_degree n stores d^0..d^n, so every reported degree,
including the top one, has its genuine outgoing differential; the top degree
is still flagged as the truncation edge in reports.

Hom(A^(x)n, B) is coordinatized input-major: the basis map (t, beta) sends
the lexicographic basis tensor e_t to b_beta and sits at index
lex(t)*dim(B) + beta.  Cobar spaces use plain left-major lexicographic order.
"""

from itertools import product

from cotorlab.errors import InputError, ValidationError
from cotorlab.linalg import CochainComplex, Matrix
from cotorlab.modules import (
    Bimodule,
    LeftComodule,
    LeftModule,
    RightComodule,
    RightModule,
    module_to_comodule,
    right_module_to_comodule,
    tensor_bimodule,
    validate_comodule,
    validate_module,
)


class PhiMap:
    """The map phi_B : B -> B (x) DA for a bimodule B, as an explicit matrix."""

    __slots__ = ("bimodule", "matrix")

    def __init__(self, bimodule, matrix):
        object.__setattr__(self, "bimodule", bimodule)
        object.__setattr__(self, "matrix", matrix)

    def __setattr__(self, name, value):
        raise AttributeError("PhiMap is immutable")

    def kernel_basis(self):
        return self.matrix.kernel_basis()


def phi_map(b):
    """phi_B(x) = sum_i (e_i x - x e_i) (x) e_i*; rows indexed by B (x) DA."""
    if not isinstance(b, Bimodule):
        raise InputError("phi_map expects a bimodule")
    _check_valid_module(b)
    alg = b.algebra
    f = alg.field
    da, db = alg.dim, b.dim
    entries = [0] * (db * da * db)
    for i in range(da):
        comm = b.left_action[i] - b.right_action[i]
        for b2 in range(db):
            row = b2 * da + i
            for beta in range(db):
                v = comm.entry(b2, beta)
                if v != 0:
                    entries[row * db + beta] = v
    return PhiMap(b, Matrix._raw(f, db * da, db, entries))


def bimodule_invariants(b):
    """Basis of {x in B : ax = xa for all a}, the simultaneous commutant."""
    if not isinstance(b, Bimodule):
        raise InputError("bimodule_invariants expects a bimodule")
    _check_valid_module(b)
    f = b.algebra.field
    commutators = [b.left_action[i] - b.right_action[i]
                   for i in range(b.algebra.dim)]
    if not commutators:
        return Matrix.identity(f, b.dim)
    return Matrix.vstack(commutators).kernel_basis()


def phi_matrix_comodules(m, n):
    """Matrix of phi : M (x) N -> M (x) C (x) N for a right and a left comodule."""
    _check_comodule_pair(m, n)
    c = m.coalgebra
    f = c.field
    dm, dc, dn = m.dim, c.dim, n.dim
    rows = dm * dc * dn
    cols = dm * dn
    entries = [0] * (rows * cols)
    for mu in range(dm):
        for nu in range(dn):
            col = mu * dn + nu
            for m2 in range(dm):
                for k in range(dc):
                    v = m.coaction[mu][m2][k]
                    if v != 0:
                        r = (m2 * dc + k) * dn + nu
                        entries[r * cols + col] += v
            for k in range(dc):
                for n2 in range(dn):
                    v = n.coaction[nu][k][n2]
                    if v != 0:
                        r = (mu * dc + k) * dn + n2
                        entries[r * cols + col] -= v
    return Matrix(f, rows, cols, entries)


def cotensor_basis(m, n):
    """Columns span M cotensor N inside M (x) N (the kernel of phi)."""
    return phi_matrix_comodules(m, n).kernel_basis()


def twist_to_bimodule_form(m, n):
    """Permutation matrix M (x) C (x) N -> M (x) N (x) C.

    Composing with the cobar d^0 yields exactly phi of the tensor bimodule;
    that identity is asserted by the test suite.
    """
    c = m.coalgebra
    f = c.field
    dm, dc, dn = m.dim, c.dim, n.dim
    size = dm * dc * dn
    entries = [0] * (size * size)
    for mu in range(dm):
        for k in range(dc):
            for nu in range(dn):
                src = (mu * dc + k) * dn + nu
                dst = (mu * dn + nu) * dc + k
                entries[dst * size + src] = 1
    return Matrix._raw(f, size, size, entries)


class BarComplex:
    """Hochschild cochain complex of a bimodule, dims dim(B) * dim(A)^n."""

    __slots__ = ("algebra", "bimodule", "max_degree", "complex")

    def __init__(self, algebra, bimodule, max_degree, cochain_complex):
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "bimodule", bimodule)
        object.__setattr__(self, "max_degree", max_degree)
        object.__setattr__(self, "complex", cochain_complex)

    def __setattr__(self, name, value):
        raise AttributeError("BarComplex is immutable")

    def dims(self):
        """Space dimension per reported degree 0..max_degree."""
        return list(self.complex.dims[: self.max_degree + 1])


class CobarComplex:
    """Cobar complex of a comodule pair, dims dim(M) * dim(C)^n * dim(N)."""

    __slots__ = ("coalgebra", "left", "right", "max_degree", "complex")

    def __init__(self, coalgebra, left, right, max_degree, cochain_complex):
        object.__setattr__(self, "coalgebra", coalgebra)
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        object.__setattr__(self, "max_degree", max_degree)
        object.__setattr__(self, "complex", cochain_complex)

    def __setattr__(self, name, value):
        raise AttributeError("CobarComplex is immutable")

    def dims(self):
        return list(self.complex.dims[: self.max_degree + 1])


def _lex(t, base, length):
    idx = 0
    for v in t:
        idx = idx * base + v
    return idx


def bar_differential_raw(field, mul3, left_mats, right_mats, da, db, n):
    """Matrix of the Hochschild coboundary from raw structure data.

    mul3[x][y][k] are the (possibly non-unital, e.g. normalized) product
    constants; left_mats/right_mats are the action matrices of the same da
    basis elements on the db-dimensional coefficient space.
    """
    cols = db * da ** n
    rows = db * da ** (n + 1)
    entries = [0] * (rows * cols)
    sign_last = 1 if (n + 1) % 2 == 0 else -1
    for tidx, t in enumerate(product(range(da), repeat=n)):
        for beta in range(db):
            col = tidx * db + beta
            # a_1 . f(a_2 .. a_{n+1})
            for s0 in range(da):
                base = (s0 * da ** n + tidx) * db
                for gamma in range(db):
                    v = left_mats[s0].entry(gamma, beta)
                    if v != 0:
                        entries[(base + gamma) * cols + col] += v
            # (-1)^i f(.., a_i a_{i+1}, ..)
            for i in range(1, n + 1):
                sign = 1 if i % 2 == 0 else -1
                head = t[: i - 1]
                tail = t[i:]
                target = t[i - 1]
                for x in range(da):
                    for y in range(da):
                        coeff = mul3[x][y][target]
                        if coeff != 0:
                            s = head + (x, y) + tail
                            r = _lex(s, da, n + 1) * db + beta
                            entries[r * cols + col] += sign * coeff
            # (-1)^{n+1} f(a_1 .. a_n) . a_{n+1}
            for sn in range(da):
                base = (tidx * da + sn) * db
                for gamma in range(db):
                    v = right_mats[sn].entry(gamma, beta)
                    if v != 0:
                        entries[(base + gamma) * cols + col] += sign_last * v
    return Matrix(field, rows, cols, entries)


def bar_differential(alg, b, n):
    """Matrix of d^n : Hom(A^(x)n, B) -> Hom(A^(x)n+1, B)."""
    return bar_differential_raw(alg.field, alg.mul, b.left_action, b.right_action,
                                alg.dim, b.dim, n)


def bar_complex(alg, b, n_max):
    """The Hochschild complex with differentials d^0..d^{n_max}; d.d asserted."""
    if not isinstance(b, Bimodule):
        raise InputError("bar_complex expects a bimodule")
    if b.algebra != alg:
        raise InputError("bimodule is not over the given algebra")
    if n_max < 0:
        raise InputError("n_max must be nonnegative")
    _check_valid_module(b)
    da, db = alg.dim, b.dim
    dims = [db * da ** n for n in range(n_max + 2)]
    diffs = [bar_differential(alg, b, n) for n in range(n_max + 1)]
    cc = CochainComplex(alg.field, 0, dims, diffs)
    return BarComplex(alg, b, n_max, cc)


def hochschild_dims(alg, b, n_max):
    """Hochschild cohomology dimensions of B in degrees 0..n_max."""
    bc = bar_complex(alg, b, n_max)
    return [bc.complex.cohomology_dim(n) for n in range(n_max + 1)]


def cobar_differential_raw(field, comul3, rho3, lam3, dm, dc, dn, deg):
    """Matrix of the cobar coboundary from raw tensors.

    comul3[k][a][b] is the (possibly reduced) comultiplication, rho3 the
    right-comodule coaction of the dm-dimensional factor into the dc slots,
    lam3 the left-comodule coaction of the dn-dimensional factor.
    """
    cols = dm * dc ** deg * dn
    rows = dm * dc ** (deg + 1) * dn
    entries = [0] * (rows * cols)
    stride_in = dc ** deg * dn
    stride_out = dc ** (deg + 1) * dn
    sign_last = 1 if (deg + 1) % 2 == 0 else -1
    for mu in range(dm):
        for tidx, t in enumerate(product(range(dc), repeat=deg)):
            for nu in range(dn):
                col = mu * stride_in + tidx * dn + nu
                # coaction of M in front
                for m2 in range(dm):
                    for k in range(dc):
                        v = rho3[mu][m2][k]
                        if v != 0:
                            r = m2 * stride_out + (k * dc ** deg + tidx) * dn + nu
                            entries[r * cols + col] += v
                # comultiplication at slot i
                for i in range(1, deg + 1):
                    sign = 1 if i % 2 == 0 else -1
                    target = t[i - 1]
                    head, tail = t[: i - 1], t[i:]
                    for a in range(dc):
                        for bb in range(dc):
                            coeff = comul3[target][a][bb]
                            if coeff != 0:
                                s = head + (a, bb) + tail
                                r = mu * stride_out + _lex(s, dc, deg + 1) * dn + nu
                                entries[r * cols + col] += sign * coeff
                # coaction of N at the end
                for k in range(dc):
                    for n2 in range(dn):
                        v = lam3[nu][k][n2]
                        if v != 0:
                            r = mu * stride_out + (tidx * dc + k) * dn + n2
                            entries[r * cols + col] += sign_last * v
    return Matrix(field, rows, cols, entries)


def cobar_differential(m, n, deg):
    """Matrix of d^deg : M (x) C^(x)deg (x) N -> M (x) C^(x)deg+1 (x) N."""
    c = m.coalgebra
    return cobar_differential_raw(c.field, c.comul, m.coaction, n.coaction,
                                  m.dim, c.dim, n.dim, deg)


def cobar_complex(m, n, n_max):
    """The cobar complex with differentials d^0..d^{n_max}; d.d asserted."""
    _check_comodule_pair(m, n)
    if n_max < 0:
        raise InputError("n_max must be nonnegative")
    c = m.coalgebra
    dm, dc, dn = m.dim, c.dim, n.dim
    dims = [dm * dc ** k * dn for k in range(n_max + 2)]
    diffs = [cobar_differential(m, n, k) for k in range(n_max + 1)]
    cc = CochainComplex(c.field, 0, dims, diffs)
    return CobarComplex(c, m, n, n_max, cc)


def cotor_dims(m, n, n_max):
    """Cotor dimensions of the comodule pair in degrees 0..n_max."""
    cb = cobar_complex(m, n, n_max)
    return [cb.complex.cohomology_dim(k) for k in range(n_max + 1)]


class ComparisonReport:
    """Both dimension vectors of the cross-check plus a per-degree verdict."""

    __slots__ = ("cotor", "hochschild", "max_degree")

    def __init__(self, cotor, hochschild, max_degree):
        object.__setattr__(self, "cotor", list(cotor))
        object.__setattr__(self, "hochschild", list(hochschild))
        object.__setattr__(self, "max_degree", max_degree)

    def __setattr__(self, name, value):
        raise AttributeError("ComparisonReport is immutable")

    @property
    def degree_verdicts(self):
        return [a == b for a, b in zip(self.cotor, self.hochschild)]

    @property
    def passed(self):
        return all(self.degree_verdicts)

    def as_dict(self):
        return {
            "cotor": self.cotor,
            "hochschild": self.hochschild,
            "degree_verdicts": ["pass" if v else "FAIL" for v in self.degree_verdicts],
            "verdict": "pass" if self.passed else "FAIL",
        }


def compare_cotor_hochschild(m, n, n_max):
    """Translate modules to comodules, run both pipelines, compare degreewise."""
    if not isinstance(m, LeftModule) or not isinstance(n, RightModule):
        raise InputError("compare expects (left module, right module)")
    if m.algebra != n.algebra:
        raise InputError("modules over different algebras")
    mc = module_to_comodule(m)
    nc = right_module_to_comodule(n)
    cot = cotor_dims(mc, nc, n_max)
    hoch = hochschild_dims(m.algebra, tensor_bimodule(m, n), n_max)
    return ComparisonReport(cot, hoch, n_max)


def _check_valid_module(mod):
    report = validate_module(mod)
    if report:
        raise ValidationError("invalid module input", report)


def _check_comodule_pair(m, n):
    if not isinstance(m, RightComodule) or not isinstance(n, LeftComodule):
        raise InputError("expected (right comodule, left comodule)")
    if m.coalgebra != n.coalgebra:
        raise InputError("comodules over different coalgebras")
    rep = validate_comodule(m) + validate_comodule(n)
    if rep:
        raise ValidationError("invalid comodule input", rep)
