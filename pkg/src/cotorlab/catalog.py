"""A library of guaranteed-valid algebras, coalgebras and modules.

Random structure constants are almost never associative, so property tests
and the acceptance suite sample from constructors instead: group algebras of
the groups of order <= 4, truncated polynomial algebras, matrix algebras and
their products, quiver-path truncations, and the small graded/DG examples
(exterior generators, sphere homology coalgebras).
"""

from fractions import Fraction

from cotorlab.algebra import Algebra, Coalgebra
from cotorlab.errors import InputError
from cotorlab.linalg import Matrix
from cotorlab.modules import Bimodule, LeftModule, RightModule, dual_right_module


def trivial_algebra(field):
    """The ground field as an algebra."""
    return Algebra(field, 1, [[[1]]], [1], labels=("1",), augmentation=[1])


def truncated_polynomial(field, n, graded=False):
    """k[x]/x^n on the basis 1, x, .., x^{n-1}; deg x = 1 when graded."""
    if n < 1:
        raise InputError("need n >= 1")
    mul = [[[1 if i + j == k else 0 for k in range(n)] for j in range(n)]
           for i in range(n)]
    labels = tuple("1" if i == 0 else f"x^{i}" if i > 1 else "x" for i in range(n))
    return Algebra(field, n, mul, [1] + [0] * (n - 1), labels=labels,
                   grading=list(range(n)) if graded else None,
                   augmentation=[1] + [0] * (n - 1))


def exterior_generator(field, degree):
    """Exterior algebra on one generator of the given positive degree.

    Over F_2 with degree 1 this is the standard stand-in for the smallest
    sub-Hopf-algebra of the mod-2 Steenrod algebra.
    """
    if degree < 1:
        raise InputError("generator degree must be positive")
    a = truncated_polynomial(field, 2, graded=False)
    return Algebra(field, 2, a.mul, a.unit, labels=("1", "x"),
                   grading=[0, degree], augmentation=[1, 0])


def group_algebra(field, table, labels=None):
    """Group algebra from a Cayley table (table[i][j] = index of g_i g_j).

    The identity must be index 0.  The all-ones augmentation (every group
    element maps to 1) is attached.
    """
    n = len(table)
    for row in table:
        if len(row) != n:
            raise InputError("ragged Cayley table")
    if any(table[0][j] != j or table[j][0] != j for j in range(n)):
        raise InputError("index 0 must be the group identity")
    mul = [[[1 if table[i][j] == k else 0 for k in range(n)] for j in range(n)]
           for i in range(n)]
    unit = [1] + [0] * (n - 1)
    return Algebra(field, n, mul, unit, labels=labels, augmentation=[1] * n)


def cyclic_group_algebra(field, n):
    """k[Z/n] on the group-element basis g^0..g^{n-1}."""
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return group_algebra(field, table,
                         labels=tuple(f"g^{i}" if i > 1 else ("1" if i == 0 else "g")
                                      for i in range(n)))


def klein_four_algebra(field):
    """k[Z/2 x Z/2] on basis indexed by (0,0), (0,1), (1,0), (1,1)."""
    elems = [(0, 0), (0, 1), (1, 0), (1, 1)]
    idx = {e: i for i, e in enumerate(elems)}
    table = [[idx[((a ^ c), (b ^ d))] for (c, d) in elems] for (a, b) in elems]
    return group_algebra(field, table, labels=("1", "b", "a", "ab"))


def matrix_algebra_2(field):
    """M_2(k) on the matrix-unit basis E11, E12, E21, E22."""
    d = 4
    mul = [[[0] * d for _ in range(d)] for _ in range(d)]
    for a in range(2):
        for b in range(2):
            for c in range(2):
                for e in range(2):
                    if b == c:
                        mul[2 * a + b][2 * c + e][2 * a + e] = 1
    return Algebra(field, d, mul, [1, 0, 0, 1],
                   labels=("E11", "E12", "E21", "E22"))


def upper_triangular_2(field):
    """Upper-triangular 2x2 matrices: the path algebra of a two-vertex quiver.

    Basis: the two vertex idempotents and the arrow between them.
    """
    # e1 = E11, e2 = E22, r = E12; e1 r = r = r e2, all else by orthogonality
    mul = [
        [[1, 0, 0], [0, 0, 0], [0, 0, 1]],   # e1 * (e1, e2, r)
        [[0, 0, 0], [0, 1, 0], [0, 0, 0]],   # e2 * ...
        [[0, 0, 0], [0, 0, 1], [0, 0, 0]],   # r * ...: r e2 = r
    ]
    return Algebra(field, 3, mul, [1, 1, 0], labels=("e1", "e2", "r"))


def product_algebra(a, b):
    """Direct product A x B on the concatenated basis."""
    if a.field is not b.field:
        raise InputError("product of algebras over different fields")
    da, db = a.dim, b.dim
    d = da + db
    mul = [[[0] * d for _ in range(d)] for _ in range(d)]
    for i in range(da):
        for j in range(da):
            for k in range(da):
                mul[i][j][k] = a.mul[i][j][k]
    for i in range(db):
        for j in range(db):
            for k in range(db):
                mul[da + i][da + j][da + k] = b.mul[i][j][k]
    unit = list(a.unit) + list(b.unit)
    return Algebra(a.field, d, mul, unit)


def tensor_product_algebra(a, b):
    """A (x) B on the lexicographic basis, degrees adding when both graded."""
    if a.field is not b.field:
        raise InputError("tensor product over different fields")
    f = a.field
    da, db = a.dim, b.dim
    d = da * db
    mul = [[[0] * d for _ in range(d)] for _ in range(d)]
    for i1 in range(da):
        for j1 in range(db):
            for i2 in range(da):
                for j2 in range(db):
                    for k1 in range(da):
                        c1 = a.mul[i1][i2][k1]
                        if c1 == 0:
                            continue
                        for k2 in range(db):
                            c2 = b.mul[j1][j2][k2]
                            if c2 != 0:
                                mul[i1 * db + j1][i2 * db + j2][k1 * db + k2] = \
                                    f.mul(c1, c2)
    unit = [f.mul(a.unit[i], b.unit[j]) for i in range(da) for j in range(db)]
    grading = None
    if a.grading is not None or b.grading is not None:
        grading = [a.degree(i) + b.degree(j) for i in range(da) for j in range(db)]
    augmentation = None
    if a.augmentation is not None and b.augmentation is not None:
        augmentation = [f.mul(a.augmentation[i], b.augmentation[j])
                        for i in range(da) for j in range(db)]
    return Algebra(f, d, mul, unit, grading=grading, augmentation=augmentation)


def sphere_homology_coalgebra(field, n):
    """Homology coalgebra of an n-sphere: a grouplike in degree 0 and a
    primitive in degree n."""
    if n < 1:
        raise InputError("sphere dimension must be positive")
    comul = [
        [[1, 0], [0, 0]],            # Delta(c0) = c0 (x) c0
        [[0, 1], [1, 0]],            # Delta(y) = c0 (x) y + y (x) c0
    ]
    return Coalgebra(field, 2, comul, [1, 0], labels=("1", "y"), grading=[0, n])


# -- modules ---------------------------------------------------------------

def left_regular_module(a):
    return LeftModule(a, a.dim, [a.left_multiplication(i) for i in range(a.dim)],
                      grading=a.grading)


def right_regular_module(a):
    return RightModule(a, a.dim, [a.right_multiplication(i) for i in range(a.dim)],
                       grading=a.grading)


def regular_bimodule(a):
    return Bimodule(a, a.dim,
                    [a.left_multiplication(i) for i in range(a.dim)],
                    [a.right_multiplication(i) for i in range(a.dim)],
                    grading=a.grading)


def trivial_left_module(a, dim=1):
    """k^dim with e_i acting as augmentation(e_i) times the identity."""
    if a.augmentation is None:
        raise InputError("algebra has no designated augmentation")
    f = a.field
    eye = Matrix.identity(f, dim)
    action = [eye.scale(a.augmentation[i]) for i in range(a.dim)]
    grading = [0] * dim if a.grading is not None else None
    return LeftModule(a, dim, action, grading=grading)


def trivial_right_module(a, dim=1):
    if a.augmentation is None:
        raise InputError("algebra has no designated augmentation")
    f = a.field
    eye = Matrix.identity(f, dim)
    action = [eye.scale(a.augmentation[i]) for i in range(a.dim)]
    grading = [0] * dim if a.grading is not None else None
    return RightModule(a, dim, action, grading=grading)


def left_module_from_generator_matrix(a, gen_powers):
    """Left module of a monogenic algebra: action[i] = gen_powers[i].

    Callers supply the full list of action matrices (one per basis element,
    e.g. powers of a nilpotent or periodic matrix); validity is the caller's
    promise and is still checked downstream by every consuming operation.
    """
    return LeftModule(a, gen_powers[0].rows, gen_powers)


def nilpotent_shift(field, m):
    """m x m single Jordan block with eigenvalue 0 (shift x^i -> x^{i+1})."""
    e = [0] * (m * m)
    for i in range(m - 1):
        e[(i + 1) * m + i] = 1
    return Matrix._raw(field, m, m, e)


def truncated_module(a, m):
    """k[x]/x^m as a left module over k[x]/x^n, m <= n."""
    if m > a.dim:
        raise InputError("quotient bigger than the algebra")
    f = a.field
    x = nilpotent_shift(f, m)
    action = [Matrix.identity(f, m)]
    for _ in range(a.dim - 1):
        action.append(action[-1] * x)
    return LeftModule(a, m, action)


def cyclic_rotation_module(a, mat):
    """Left module over k[Z/n] generated by one invertible matrix of order n."""
    f = a.field
    action = [Matrix.identity(f, mat.rows)]
    for _ in range(a.dim - 1):
        action.append(action[-1] * mat)
    return LeftModule(a, mat.rows, action)


def column_module(m2):
    """The column space k^2 as a left module over M_2(k)."""
    f = m2.field
    mats = []
    for a in range(2):
        for b in range(2):
            e = [0] * 4
            e[a * 2 + b] = 1
            mats.append(Matrix._raw(f, 2, 2, e))
    return LeftModule(m2, 2, mats)


def ut2_column_module(ut):
    """The natural 2-dimensional module of the triangular quiver algebra."""
    f = ut.field
    e1 = Matrix.from_rows(f, [[1, 0], [0, 0]])
    e2 = Matrix.from_rows(f, [[0, 0], [0, 1]])
    r = Matrix.from_rows(f, [[0, 1], [0, 0]])
    return LeftModule(ut, 2, [e1, e2, r])


def ut2_vertex_character(ut, vertex):
    """One-dimensional module at a vertex of the quiver (vertex in {0, 1})."""
    f = ut.field
    one = Matrix.identity(f, 1)
    zero = Matrix.zeros(f, 1, 1)
    acts = [one if vertex == 0 else zero, zero if vertex == 0 else one, zero]
    return LeftModule(ut, 1, acts)


def first_factor_module(kk):
    """k as a module over k x k through the first projection."""
    f = kk.field
    return LeftModule(kk, 1, [Matrix.identity(f, 1), Matrix.zeros(f, 1, 1)])


def second_factor_right_module(kk):
    f = kk.field
    return RightModule(kk, 1, [Matrix.zeros(f, 1, 1), Matrix.identity(f, 1)])


def sign_module(group_alg):
    """g -> -1 character module of k[Z/n] for even n (the sign character)."""
    f = group_alg.field
    n = group_alg.dim
    if n % 2 != 0:
        raise InputError("sign character needs even order")
    acts = [Matrix.identity(f, 1).scale((-1) ** i) for i in range(n)]
    return LeftModule(group_alg, 1, acts)


def rotation_matrix_order4(field):
    """[[0,-1],[1,0]]: an order-4 matrix over any field."""
    return Matrix(field, 2, 2, [0, -1, 1, 0])


def rotation_matrix_order3(field):
    """[[0,-1],[1,-1]]: an order-3 matrix (companion of x^2 + x + 1)."""
    return Matrix(field, 2, 2, [0, -1, 1, -1])


def unipotent_jordan3(field):
    """I + N for the 3x3 shift; has order p in characteristic p (p <= 3)."""
    return Matrix.identity(field, 3) + nilpotent_shift(field, 3)


def klein_module(kv, g1, g2):
    """Module over k[Z/2 x Z/2] from two commuting involutions g1, g2.

    Basis order of the algebra is (0,0), (0,1), (1,0), (1,1) with the first
    coordinate acted by g1.
    """
    acts = [Matrix.identity(kv.field, g1.rows), g2, g1, g1 * g2]
    return LeftModule(kv, g1.rows, acts)


# -- fixed instance list for the cross-check suites -------------------------

def compare_instances(fields):
    """A deterministic catalog of (label, left module, right module) triples.

    Spans the constructor library at dim(A) <= 4, dim(M), dim(N) <= 3 over
    the given fields; used by the acceptance suite (>= 25 instances when all
    three standard fields are passed).
    """
    out = []
    for field, tag in fields:
        minus_one = field.coerce(-1)

        kx2 = truncated_polynomial(field, 2)
        k_l, k_r = trivial_left_module(kx2), trivial_right_module(kx2)
        out.append((f"k[x]/x^2 {tag}: trivial,trivial", k_l, k_r))
        reg2 = left_regular_module(kx2)
        out.append((f"k[x]/x^2 {tag}: regular,trivial", reg2, k_r))
        out.append((f"k[x]/x^2 {tag}: regular,dual", reg2, dual_right_module(reg2)))

        kx3 = truncated_polynomial(field, 3)
        out.append((f"k[x]/x^3 {tag}: trivial,trivial",
                    trivial_left_module(kx3), trivial_right_module(kx3)))
        q2 = truncated_module(kx3, 2)
        out.append((f"k[x]/x^3 {tag}: k[x]/x^2,dual", q2, dual_right_module(q2)))
        out.append((f"k[x]/x^3 {tag}: regular,trivial",
                    left_regular_module(kx3), trivial_right_module(kx3)))

        kx4 = truncated_polynomial(field, 4)
        out.append((f"k[x]/x^4 {tag}: trivial,trivial",
                    trivial_left_module(kx4), trivial_right_module(kx4)))
        q3 = truncated_module(kx4, 3)
        out.append((f"k[x]/x^4 {tag}: k[x]/x^3,dual", q3, dual_right_module(q3)))

        z2 = cyclic_group_algebra(field, 2)
        regz2 = left_regular_module(z2)
        out.append((f"k[Z/2] {tag}: regular,dual", regz2, dual_right_module(regz2)))
        if minus_one != 1:
            out.append((f"k[Z/2] {tag}: sign,trivial",
                        sign_module(z2), trivial_right_module(z2)))

        z3 = cyclic_group_algebra(field, 3)
        out.append((f"k[Z/3] {tag}: trivial,trivial",
                    trivial_left_module(z3), trivial_right_module(z3)))
        rot3 = cyclic_rotation_module(z3, rotation_matrix_order3(field))
        out.append((f"k[Z/3] {tag}: rotation,trivial",
                    rot3, trivial_right_module(z3)))

        z4 = cyclic_group_algebra(field, 4)
        out.append((f"k[Z/4] {tag}: trivial,trivial",
                    trivial_left_module(z4), trivial_right_module(z4)))
        rot4 = cyclic_rotation_module(z4, rotation_matrix_order4(field))
        out.append((f"k[Z/4] {tag}: rotation,dual", rot4, dual_right_module(rot4)))

        kv = klein_four_algebra(field)
        out.append((f"k[V4] {tag}: trivial,trivial",
                    trivial_left_module(kv), trivial_right_module(kv)))

        m2 = matrix_algebra_2(field)
        col = column_module(m2)
        out.append((f"M2 {tag}: column,row", col, dual_right_module(col)))

        ut = upper_triangular_2(field)
        nat = ut2_column_module(ut)
        out.append((f"UT2 {tag}: natural,dual", nat, dual_right_module(nat)))
        out.append((f"UT2 {tag}: vertex0,dual(vertex1)",
                    ut2_vertex_character(ut, 0),
                    dual_right_module(ut2_vertex_character(ut, 1))))

        kk = product_algebra(trivial_algebra(field), trivial_algebra(field))
        out.append((f"k x k {tag}: first,second",
                    first_factor_module(kk), second_factor_right_module(kk)))

        tens = tensor_product_algebra(truncated_polynomial(field, 2),
                                      truncated_polynomial(field, 2))
        out.append((f"k[x]/x^2 (x) k[y]/y^2 {tag}: trivial,trivial",
                    trivial_left_module(tens), trivial_right_module(tens)))
    return out
