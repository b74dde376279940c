"""Finite-dimensional algebras and coalgebras by structure constants.

An algebra is a dense rank-3 tensor mul[i][j][k] with e_i e_j = sum_k
mul[i][j][k] e_k plus the coefficient vector of 1; a coalgebra is the arrow
reversal, comul[k][i][j] with Delta(c_k) = sum comul[k][i][j] c_i (x) c_j and
a counit covector.  Dualizing transposes the tensor, so validity of one side
is validity of the other; both directions and the round trip are exposed.

Tensor-product bases are always ordered lexicographically with the left
factor major; every module downstream relies on this single convention.
"""

from cotorlab.errors import InputError, ValidationError
from cotorlab.linalg import Matrix


def _coerce_tensor3(field, t, d0, d1, d2):
    out = []
    if len(t) != d0:
        raise InputError("structure tensor has wrong outer dimension")
    for block in t:
        if len(block) != d1:
            raise InputError("structure tensor has wrong middle dimension")
        rows = []
        for row in block:
            if len(row) != d2:
                raise InputError("structure tensor has wrong inner dimension")
            rows.append(tuple(field.coerce(v) for v in row))
        out.append(tuple(rows))
    return tuple(out)


def _coerce_vec(field, v, d, what):
    v = tuple(field.coerce(x) for x in v)
    if len(v) != d:
        raise InputError(f"{what} has length {len(v)}, expected {d}")
    return v


def _coerce_grading(grading, d):
    if grading is None:
        return None
    g = tuple(int(x) for x in grading)
    if len(g) != d:
        raise InputError("grading length mismatch")
    return g


class Algebra:
    """Associative unital algebra on basis e_0..e_{dim-1}.

    Optional data: labels (basis names), grading (one integer degree per
    basis element), augmentation (a designated algebra character, used by the
    tower machinery for epsilon-twisted bimodules).
    """

    __slots__ = ("field", "dim", "mul", "unit", "labels", "grading", "augmentation")

    def __init__(self, field, dim, mul, unit, labels=None, grading=None,
                 augmentation=None):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "dim", int(dim))
        object.__setattr__(self, "mul", _coerce_tensor3(field, mul, dim, dim, dim))
        object.__setattr__(self, "unit", _coerce_vec(field, unit, dim, "unit"))
        object.__setattr__(self, "labels",
                           tuple(labels) if labels is not None else None)
        object.__setattr__(self, "grading", _coerce_grading(grading, dim))
        object.__setattr__(self, "augmentation",
                           _coerce_vec(field, augmentation, dim, "augmentation")
                           if augmentation is not None else None)

    def __setattr__(self, name, value):
        raise AttributeError("Algebra is immutable")

    def __eq__(self, other):
        return (isinstance(other, Algebra) and self.field is other.field
                and self.dim == other.dim and self.mul == other.mul
                and self.unit == other.unit and self.grading == other.grading)

    def __repr__(self):
        g = ", graded" if self.grading is not None else ""
        return f"Algebra(dim={self.dim} over {self.field}{g})"

    def multiply(self, x, y):
        """Product of two coefficient vectors."""
        f = self.field
        out = [0] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                for k, c in enumerate(self.mul[i][j]):
                    if c != 0:
                        out[k] = f.add(out[k], f.mul(f.mul(xi, yj), c))
        return tuple(out)

    def left_multiplication(self, i):
        """Matrix of x -> e_i x."""
        d = self.dim
        e = [0] * (d * d)
        for j in range(d):
            for k in range(d):
                e[k * d + j] = self.mul[i][j][k]
        return Matrix._raw(self.field, d, d, e)

    def right_multiplication(self, i):
        """Matrix of x -> x e_i."""
        d = self.dim
        e = [0] * (d * d)
        for j in range(d):
            for k in range(d):
                e[k * d + j] = self.mul[j][i][k]
        return Matrix._raw(self.field, d, d, e)

    def canonical_element(self):
        """Coefficients of sum_i e_i (x) e_i* in the A (x) DA basis."""
        d = self.dim
        v = [0] * (d * d)
        for i in range(d):
            v[i * d + i] = 1
        return tuple(v)

    def degree(self, i):
        return self.grading[i] if self.grading is not None else 0


class Coalgebra:
    """Coassociative counital coalgebra on basis c_0..c_{dim-1}."""

    __slots__ = ("field", "dim", "comul", "counit", "labels", "grading")

    def __init__(self, field, dim, comul, counit, labels=None, grading=None):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "dim", int(dim))
        object.__setattr__(self, "comul", _coerce_tensor3(field, comul, dim, dim, dim))
        object.__setattr__(self, "counit", _coerce_vec(field, counit, dim, "counit"))
        object.__setattr__(self, "labels",
                           tuple(labels) if labels is not None else None)
        object.__setattr__(self, "grading", _coerce_grading(grading, dim))

    def __setattr__(self, name, value):
        raise AttributeError("Coalgebra is immutable")

    def __eq__(self, other):
        return (isinstance(other, Coalgebra) and self.field is other.field
                and self.dim == other.dim and self.comul == other.comul
                and self.counit == other.counit and self.grading == other.grading)

    def __repr__(self):
        g = ", graded" if self.grading is not None else ""
        return f"Coalgebra(dim={self.dim} over {self.field}{g})"

    def comultiply(self, x):
        """Coefficients of Delta(x) in the c_i (x) c_j lexicographic basis."""
        f = self.field
        d = self.dim
        out = [0] * (d * d)
        for k, xk in enumerate(x):
            if xk == 0:
                continue
            for i in range(d):
                for j, c in enumerate(self.comul[k][i]):
                    if c != 0:
                        out[i * d + j] = f.add(out[i * d + j], f.mul(xk, c))
        return tuple(out)

    def comultiplication_matrix(self):
        """Matrix of Delta : C -> C (x) C."""
        d = self.dim
        e = [0] * (d * d * d)
        for k in range(d):
            for i in range(d):
                for j in range(d):
                    e[(i * d + j) * d + k] = self.comul[k][i][j]
        return Matrix._raw(self.field, d * d, d, e)

    def counit_matrix(self):
        return Matrix._raw(self.field, 1, self.dim, self.counit)

    def degree(self, i):
        return self.grading[i] if self.grading is not None else 0


def validate_algebra(a):
    """Report every violated associativity/unit/grading/character constraint.

    Violations are data, not errors: the list is empty iff the algebra is
    valid.  Each entry names the offending indices.
    """
    report = []
    d = a.dim
    f = a.field
    for i in range(d):
        for j in range(d):
            for l in range(d):
                lhs = a.multiply(a.mul[i][j], _basis(d, l))
                rhs = a.multiply(_basis(d, i), a.mul[j][l])
                if lhs != rhs:
                    report.append(f"associativity fails at triple ({i}, {j}, {l})")
    for i in range(d):
        e = _basis(d, i)
        if a.multiply(a.unit, e) != e:
            report.append(f"left unit law fails at basis element {i}")
        if a.multiply(e, a.unit) != e:
            report.append(f"right unit law fails at basis element {i}")
    if a.grading is not None:
        for i in range(d):
            if a.grading[i] < 0:
                report.append(f"negative degree at basis element {i}")
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    if a.mul[i][j][k] != 0 and \
                            a.grading[i] + a.grading[j] != a.grading[k]:
                        report.append(
                            f"grading violated by product ({i}, {j}) -> {k}")
        for i in range(d):
            if a.unit[i] != 0 and a.grading[i] != 0:
                report.append(f"unit has a component in degree {a.grading[i]}")
    if a.augmentation is not None:
        aug = a.augmentation
        one = 0
        for i in range(d):
            one = f.add(one, f.mul(aug[i], a.unit[i]))
        if one != 1:
            report.append("augmentation does not send 1 to 1")
        for i in range(d):
            for j in range(d):
                val = 0
                for k in range(d):
                    if a.mul[i][j][k] != 0:
                        val = f.add(val, f.mul(a.mul[i][j][k], aug[k]))
                if val != f.mul(aug[i], aug[j]):
                    report.append(f"augmentation not multiplicative at ({i}, {j})")
    return report


def validate_coalgebra(c):
    """Report coassociativity/counit/grading violations; empty means valid."""
    report = []
    d = c.dim
    f = c.field
    for k in range(d):
        # (Delta (x) 1)Delta vs (1 (x) Delta)Delta on c_k, coefficients of
        # c_a (x) c_b (x) c_j
        for aa in range(d):
            for b in range(d):
                for j in range(d):
                    lhs = 0
                    rhs = 0
                    for i in range(d):
                        lhs = f.add(lhs, f.mul(c.comul[k][i][j], c.comul[i][aa][b]))
                        rhs = f.add(rhs, f.mul(c.comul[k][aa][i], c.comul[i][b][j]))
                    if lhs != rhs:
                        report.append(
                            f"coassociativity fails at element {k}, "
                            f"component ({aa}, {b}, {j})")
    for k in range(d):
        for j in range(d):
            left = 0
            right = 0
            for i in range(d):
                left = f.add(left, f.mul(c.counit[i], c.comul[k][i][j]))
                right = f.add(right, f.mul(c.counit[i], c.comul[k][j][i]))
            want = 1 if j == k else 0
            if left != want:
                report.append(f"left counit law fails at ({k}, {j})")
            if right != want:
                report.append(f"right counit law fails at ({k}, {j})")
    if c.grading is not None:
        if any(g < 0 for g in c.grading):
            report.append("negative degree in coalgebra grading")
        for k in range(d):
            for i in range(d):
                for j in range(d):
                    if c.comul[k][i][j] != 0 and \
                            c.grading[i] + c.grading[j] != c.grading[k]:
                        report.append(
                            f"grading violated by Delta at ({k}) -> ({i}, {j})")
        for k in range(d):
            if c.counit[k] != 0 and c.grading[k] != 0:
                report.append(f"counit supported in degree {c.grading[k]}")
    return report


def _basis(d, i):
    return tuple(1 if j == i else 0 for j in range(d))


def _require_valid_algebra(a):
    report = validate_algebra(a)
    if report:
        raise ValidationError("invalid algebra", report)


def _require_valid_coalgebra(c):
    report = validate_coalgebra(c)
    if report:
        raise ValidationError("invalid coalgebra", report)


def dual_coalgebra(a):
    """The dual of an algebra: comul[k][i][j] = mul[i][j][k], counit = unit.

    Degrees dualize with a sign, but they are stored as the comodule-side
    nonnegative degrees, so the stored degree of e_i* equals deg(e_i).
    """
    _require_valid_algebra(a)
    d = a.dim
    comul = [[[a.mul[i][j][k] for j in range(d)] for i in range(d)]
             for k in range(d)]
    labels = tuple(l + "*" for l in a.labels) if a.labels is not None else None
    return Coalgebra(a.field, d, comul, a.unit, labels=labels, grading=a.grading)


def dual_algebra(c):
    """The dual of a coalgebra: mul[i][j][k] = comul[k][i][j], unit = counit."""
    _require_valid_coalgebra(c)
    d = c.dim
    mul = [[[c.comul[k][i][j] for k in range(d)] for j in range(d)]
           for i in range(d)]
    labels = tuple(l + "*" for l in c.labels) if c.labels is not None else None
    return Algebra(c.field, d, mul, c.counit, labels=labels, grading=c.grading)


def opposite(a):
    """Opposite algebra: mul_op[i][j][k] = mul[j][i][k]."""
    _require_valid_algebra(a)
    d = a.dim
    mul = [[[a.mul[j][i][k] for k in range(d)] for j in range(d)]
           for i in range(d)]
    return Algebra(a.field, d, mul, a.unit, labels=a.labels, grading=a.grading,
                   augmentation=a.augmentation)


def enveloping(a):
    """A (x) A^op on the lexicographic basis e_i (x) e_j; dim = dim(A)^2."""
    _require_valid_algebra(a)
    d = a.dim
    dd = d * d
    f = a.field
    mul = [[[0] * dd for _ in range(dd)] for _ in range(dd)]
    for i1 in range(d):
        for j1 in range(d):
            for i2 in range(d):
                for j2 in range(d):
                    for k1 in range(d):
                        c1 = a.mul[i1][i2][k1]
                        if c1 == 0:
                            continue
                        for k2 in range(d):
                            c2 = a.mul[j2][j1][k2]  # opposite on the right factor
                            if c2 != 0:
                                mul[i1 * d + j1][i2 * d + j2][k1 * d + k2] = \
                                    f.mul(c1, c2)
    unit = [0] * dd
    for i in range(d):
        if a.unit[i] == 0:
            continue
        for j in range(d):
            if a.unit[j] != 0:
                unit[i * d + j] = f.mul(a.unit[i], a.unit[j])
    grading = None
    if a.grading is not None:
        grading = [a.grading[i] + a.grading[j] for i in range(d) for j in range(d)]
    return Algebra(f, dd, mul, unit, grading=grading)
