"""Modules, comodules, bimodules, and the translation dictionary between them.

A left module over a finite-dimensional algebra becomes a right comodule over
the dual coalgebra by reading the action matrices sideways: the coaction
tensor is rho[m][m2][i] = action[i][m2][m], which encodes Delta(b_m) =
sum b_{m2} (x) e_i* exactly when e_i b_m has a b_{m2} component.  The inverse
reads the same tensor back, so the round trip is the identity on the nose.
Right modules pair with left comodules the same way.

Modules always sit over an explicit Algebra and comodules over an explicit
Coalgebra; translations construct the dual partner so the dictionary stays
auditable.
"""

from cotorlab.algebra import (
    dual_algebra,
    dual_coalgebra,
    validate_algebra,
    validate_coalgebra,
)
from cotorlab.errors import InputError, ValidationError
from cotorlab.linalg import Matrix


def _coerce_actions(field, action, dim_a, dim_m):
    mats = []
    if len(action) != dim_a:
        raise InputError("need one action matrix per algebra basis element")
    for a in action:
        if isinstance(a, Matrix):
            if a.rows != dim_m or a.cols != dim_m:
                raise InputError("action matrix has wrong shape")
            mats.append(a if a.field is field else
                        Matrix(field, dim_m, dim_m, a.entries))
        else:
            mats.append(Matrix.from_rows(field, a))
            if mats[-1].rows != dim_m or mats[-1].cols != dim_m:
                raise InputError("action matrix has wrong shape")
    return tuple(mats)


def _coerce_grading(grading, d):
    if grading is None:
        return None
    g = tuple(int(x) for x in grading)
    if len(g) != d:
        raise InputError("grading length mismatch")
    return g


class LeftModule:
    """Left module: action[i] is the matrix of m -> e_i . m."""

    __slots__ = ("algebra", "dim", "action", "grading")

    def __init__(self, algebra, dim, action, grading=None):
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "dim", int(dim))
        object.__setattr__(self, "action",
                           _coerce_actions(algebra.field, action, algebra.dim, dim))
        object.__setattr__(self, "grading", _coerce_grading(grading, dim))

    def __setattr__(self, name, value):
        raise AttributeError("LeftModule is immutable")

    def __repr__(self):
        return f"LeftModule(dim={self.dim} over {self.algebra!r})"

    def __eq__(self, other):
        return (isinstance(other, LeftModule) and self.algebra == other.algebra
                and self.dim == other.dim and self.action == other.action
                and self.grading == other.grading)

    def degree(self, i):
        return self.grading[i] if self.grading is not None else 0


class RightModule:
    """Right module: action[i] is the matrix of n -> n . e_i."""

    __slots__ = ("algebra", "dim", "action", "grading")

    def __init__(self, algebra, dim, action, grading=None):
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "dim", int(dim))
        object.__setattr__(self, "action",
                           _coerce_actions(algebra.field, action, algebra.dim, dim))
        object.__setattr__(self, "grading", _coerce_grading(grading, dim))

    def __setattr__(self, name, value):
        raise AttributeError("RightModule is immutable")

    def __repr__(self):
        return f"RightModule(dim={self.dim} over {self.algebra!r})"

    def __eq__(self, other):
        return (isinstance(other, RightModule) and self.algebra == other.algebra
                and self.dim == other.dim and self.action == other.action
                and self.grading == other.grading)

    def degree(self, i):
        return self.grading[i] if self.grading is not None else 0


class Bimodule:
    """Commuting left and right actions over one algebra."""

    __slots__ = ("algebra", "dim", "left_action", "right_action", "grading")

    def __init__(self, algebra, dim, left_action, right_action, grading=None):
        f = algebra.field
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "dim", int(dim))
        object.__setattr__(self, "left_action",
                           _coerce_actions(f, left_action, algebra.dim, dim))
        object.__setattr__(self, "right_action",
                           _coerce_actions(f, right_action, algebra.dim, dim))
        object.__setattr__(self, "grading", _coerce_grading(grading, dim))

    def __setattr__(self, name, value):
        raise AttributeError("Bimodule is immutable")

    def __repr__(self):
        return f"Bimodule(dim={self.dim} over {self.algebra!r})"

    def degree(self, i):
        return self.grading[i] if self.grading is not None else 0


class RightComodule:
    """Right comodule: Delta(b_m) = sum_{m2,k} rho[m][m2][k] b_{m2} (x) c_k."""

    __slots__ = ("coalgebra", "dim", "coaction", "grading")

    def __init__(self, coalgebra, dim, coaction, grading=None):
        f = coalgebra.field
        from cotorlab.algebra import _coerce_tensor3
        object.__setattr__(self, "coalgebra", coalgebra)
        object.__setattr__(self, "dim", int(dim))
        object.__setattr__(self, "coaction",
                           _coerce_tensor3(f, coaction, dim, dim, coalgebra.dim))
        object.__setattr__(self, "grading", _coerce_grading(grading, dim))

    def __setattr__(self, name, value):
        raise AttributeError("RightComodule is immutable")

    def __repr__(self):
        return f"RightComodule(dim={self.dim} over {self.coalgebra!r})"

    def __eq__(self, other):
        return (isinstance(other, RightComodule)
                and self.coalgebra == other.coalgebra and self.dim == other.dim
                and self.coaction == other.coaction
                and self.grading == other.grading)

    def coaction_matrix(self):
        """Matrix of Delta_M : M -> M (x) C (rows in lexicographic order)."""
        dm, dc = self.dim, self.coalgebra.dim
        e = [0] * (dm * dc * dm)
        for m in range(dm):
            for m2 in range(dm):
                for k in range(dc):
                    e[(m2 * dc + k) * dm + m] = self.coaction[m][m2][k]
        return Matrix._raw(self.coalgebra.field, dm * dc, dm, e)

    def degree(self, i):
        return self.grading[i] if self.grading is not None else 0


class LeftComodule:
    """Left comodule: Delta(b_m) = sum_{k,m2} lam[m][k][m2] c_k (x) b_{m2}."""

    __slots__ = ("coalgebra", "dim", "coaction", "grading")

    def __init__(self, coalgebra, dim, coaction, grading=None):
        f = coalgebra.field
        from cotorlab.algebra import _coerce_tensor3
        object.__setattr__(self, "coalgebra", coalgebra)
        object.__setattr__(self, "dim", int(dim))
        object.__setattr__(self, "coaction",
                           _coerce_tensor3(f, coaction, dim, coalgebra.dim, dim))
        object.__setattr__(self, "grading", _coerce_grading(grading, dim))

    def __setattr__(self, name, value):
        raise AttributeError("LeftComodule is immutable")

    def __repr__(self):
        return f"LeftComodule(dim={self.dim} over {self.coalgebra!r})"

    def __eq__(self, other):
        return (isinstance(other, LeftComodule)
                and self.coalgebra == other.coalgebra and self.dim == other.dim
                and self.coaction == other.coaction
                and self.grading == other.grading)

    def coaction_matrix(self):
        """Matrix of Delta_N : N -> C (x) N."""
        dn, dc = self.dim, self.coalgebra.dim
        e = [0] * (dc * dn * dn)
        for m in range(dn):
            for k in range(dc):
                for m2 in range(dn):
                    e[(k * dn + m2) * dn + m] = self.coaction[m][k][m2]
        return Matrix._raw(self.coalgebra.field, dc * dn, dn, e)

    def degree(self, i):
        return self.grading[i] if self.grading is not None else 0


def validate_module(mod):
    """Violated action/unit/commutation/grading constraints, as a report list."""
    if isinstance(mod, Bimodule):
        report = _validate_action(mod.algebra, mod.left_action, left=True,
                                  grading=mod.grading, tag="left ")
        report += _validate_action(mod.algebra, mod.right_action, left=False,
                                   grading=mod.grading, tag="right ")
        for i in range(mod.algebra.dim):
            for j in range(mod.algebra.dim):
                if mod.left_action[i] * mod.right_action[j] != \
                        mod.right_action[j] * mod.left_action[i]:
                    report.append(f"left/right actions do not commute at ({i}, {j})")
        return report
    if isinstance(mod, LeftModule):
        return _validate_action(mod.algebra, mod.action, left=True,
                                grading=mod.grading)
    if isinstance(mod, RightModule):
        return _validate_action(mod.algebra, mod.action, left=False,
                                grading=mod.grading)
    raise InputError(f"not a module: {mod!r}")


def _validate_action(alg, action, left, grading, tag=""):
    report = []
    f = alg.field
    d = alg.dim
    dm = action[0].rows if action else 0
    unit_mat = Matrix.zeros(f, dm, dm)
    for i in range(d):
        if alg.unit[i] != 0:
            unit_mat = unit_mat + action[i].scale(alg.unit[i])
    if unit_mat != Matrix.identity(f, dm):
        report.append(f"{tag}action of the unit is not the identity")
    for i in range(d):
        for j in range(d):
            expanded = Matrix.zeros(f, dm, dm)
            for k in range(d):
                c = alg.mul[i][j][k]
                if c != 0:
                    expanded = expanded + action[k].scale(c)
            composed = action[i] * action[j] if left else action[j] * action[i]
            if expanded != composed:
                report.append(f"{tag}action incompatible with product at ({i}, {j})")
    if grading is not None:
        for i in range(d):
            deg_i = alg.degree(i)
            for m2 in range(dm):
                for m in range(dm):
                    if action[i].entry(m2, m) != 0 and \
                            grading[m2] != grading[m] + deg_i:
                        report.append(
                            f"{tag}action of element {i} is not homogeneous "
                            f"of degree {deg_i} at ({m2}, {m})")
    return report


def validate_comodule(com):
    """Coassociativity / counit / grading report for either comodule side."""
    c = com.coalgebra
    f = c.field
    dc = c.dim
    dm = com.dim
    report = []
    if isinstance(com, RightComodule):
        rho = com.coaction
        for m in range(dm):
            for m2 in range(dm):
                for j in range(dc):
                    for k in range(dc):
                        lhs = 0
                        rhs = 0
                        for mm in range(dm):
                            lhs = f.add(lhs, f.mul(rho[m][mm][k], rho[mm][m2][j]))
                        for l in range(dc):
                            rhs = f.add(rhs, f.mul(rho[m][m2][l], c.comul[l][j][k]))
                        if lhs != rhs:
                            report.append(f"coassociativity fails at "
                                          f"({m}, {m2}, {j}, {k})")
        for m in range(dm):
            for m2 in range(dm):
                s = 0
                for k in range(dc):
                    s = f.add(s, f.mul(rho[m][m2][k], c.counit[k]))
                if s != (1 if m == m2 else 0):
                    report.append(f"counit law fails at ({m}, {m2})")
        if com.grading is not None:
            for m in range(dm):
                for m2 in range(dm):
                    for k in range(dc):
                        if rho[m][m2][k] != 0 and \
                                com.grading[m] != com.grading[m2] + c.degree(k):
                            report.append(f"coaction not homogeneous at "
                                          f"({m}, {m2}, {k})")
        return report
    if isinstance(com, LeftComodule):
        lam = com.coaction
        for m in range(dm):
            for m2 in range(dm):
                for i in range(dc):
                    for j in range(dc):
                        lhs = 0
                        rhs = 0
                        for l in range(dc):
                            lhs = f.add(lhs, f.mul(lam[m][l][m2], c.comul[l][i][j]))
                        for mm in range(dm):
                            rhs = f.add(rhs, f.mul(lam[m][i][mm], lam[mm][j][m2]))
                        if lhs != rhs:
                            report.append(f"coassociativity fails at "
                                          f"({m}, {m2}, {i}, {j})")
        for m in range(dm):
            for m2 in range(dm):
                s = 0
                for k in range(dc):
                    s = f.add(s, f.mul(c.counit[k], lam[m][k][m2]))
                if s != (1 if m == m2 else 0):
                    report.append(f"counit law fails at ({m}, {m2})")
        if com.grading is not None:
            for m in range(dm):
                for k in range(dc):
                    for m2 in range(dm):
                        if lam[m][k][m2] != 0 and \
                                com.grading[m] != c.degree(k) + com.grading[m2]:
                            report.append(f"coaction not homogeneous at "
                                          f"({m}, {k}, {m2})")
        return report
    raise InputError(f"not a comodule: {com!r}")


def _require_valid_module(m):
    report = validate_module(m)
    if report:
        raise ValidationError("invalid module", report)


def _require_valid_comodule(m):
    report = validate_comodule(m)
    if report:
        raise ValidationError("invalid comodule", report)


def module_to_comodule(m):
    """Left module over A -> right comodule over DA (reads actions sideways)."""
    if not isinstance(m, LeftModule):
        raise InputError("module_to_comodule expects a left module")
    _require_valid_module(m)
    cod = dual_coalgebra(m.algebra)
    da, dm = m.algebra.dim, m.dim
    rho = [[[m.action[i].entry(m2, mm) for i in range(da)]
            for m2 in range(dm)] for mm in range(dm)]
    return RightComodule(cod, dm, rho, grading=m.grading)


def comodule_to_module(m):
    """Right comodule over C -> left module over DC; inverse of the above."""
    if not isinstance(m, RightComodule):
        raise InputError("comodule_to_module expects a right comodule")
    _require_valid_comodule(m)
    alg = dual_algebra(m.coalgebra)
    dc, dm = m.coalgebra.dim, m.dim
    action = [Matrix.from_rows(alg.field,
                               [[m.coaction[mm][m2][i] for mm in range(dm)]
                                for m2 in range(dm)])
              for i in range(dc)]
    return LeftModule(alg, dm, action, grading=m.grading)


def right_module_to_comodule(n):
    """Right module over A -> left comodule over DA."""
    if not isinstance(n, RightModule):
        raise InputError("right_module_to_comodule expects a right module")
    _require_valid_module(n)
    cod = dual_coalgebra(n.algebra)
    da, dn = n.algebra.dim, n.dim
    lam = [[[n.action[i].entry(m2, mm) for m2 in range(dn)]
            for i in range(da)] for mm in range(dn)]
    return LeftComodule(cod, dn, lam, grading=n.grading)


def left_comodule_to_module(n):
    """Left comodule over C -> right module over DC; inverse of the above."""
    if not isinstance(n, LeftComodule):
        raise InputError("left_comodule_to_module expects a left comodule")
    _require_valid_comodule(n)
    alg = dual_algebra(n.coalgebra)
    dc, dn = n.coalgebra.dim, n.dim
    action = [Matrix.from_rows(alg.field,
                               [[n.coaction[mm][i][m2] for mm in range(dn)]
                                for m2 in range(dn)])
              for i in range(dc)]
    return RightModule(alg, dn, action, grading=n.grading)


def dual_right_module(m):
    """Dual of a left module, (f.a)(x) = f(a.x): actions transpose."""
    if not isinstance(m, LeftModule):
        raise InputError("dual_right_module expects a left module")
    return RightModule(m.algebra, m.dim, [a.transpose() for a in m.action],
                       grading=m.grading)


def contragredient(m):
    """Dual comodule of a right comodule, (Delta f)(x) = (f (x) 1)(Delta x)."""
    if not isinstance(m, RightComodule):
        raise InputError("contragredient expects a right comodule")
    _require_valid_comodule(m)
    dm, dc = m.dim, m.coalgebra.dim
    lam = [[[m.coaction[x][mm][k] for x in range(dm)]
            for k in range(dc)] for mm in range(dm)]
    return LeftComodule(m.coalgebra, dm, lam, grading=m.grading)


def tensor_bimodule(m, n):
    """M (x) N as a bimodule: A acts on M from the left, on N from the right."""
    if not isinstance(m, LeftModule) or not isinstance(n, RightModule):
        raise InputError("tensor_bimodule expects (left module, right module)")
    if m.algebra != n.algebra:
        raise InputError("tensor_bimodule: modules over different algebras")
    alg = m.algebra
    f = alg.field
    im = Matrix.identity(f, m.dim)
    i_n = Matrix.identity(f, n.dim)
    left = [a.kron(i_n) for a in m.action]
    right = [im.kron(a) for a in n.action]
    grading = None
    if m.grading is not None or n.grading is not None:
        gm = m.grading or (0,) * m.dim
        gn = n.grading or (0,) * n.dim
        grading = [gm[i] + gn[j] for i in range(m.dim) for j in range(n.dim)]
    return Bimodule(alg, m.dim * n.dim, left, right, grading=grading)


def intertwiners(m1, m2):
    """Basis of A-linear maps m1 -> m2, via the kernel of the commutation system.

    Works for two left modules or two right modules over the same algebra.
    Each returned Matrix T satisfies T . action1[i] = action2[i] . T.
    """
    if m1.algebra != m2.algebra:
        raise InputError("intertwiners: modules over different algebras")
    f = m1.algebra.field
    d1, d2 = m1.dim, m2.dim
    i1 = Matrix.identity(f, d1)
    i2 = Matrix.identity(f, d2)
    blocks = []
    for a1, a2 in zip(m1.action, m2.action):
        # vec(T a1 - a2 T) = (a1^t (x) I - I (x) a2) vec(T), T as d2 x d1
        blocks.append(a1.transpose().kron(i2) - i1.kron(a2))
    system = Matrix.vstack(blocks)
    ker = system.kernel_basis()
    mats = []
    for idx in range(ker.cols):
        col = ker.column(idx)
        # column-major vec: T[i][j] sits at col[j * d2 + i]
        mats.append(Matrix(f, d2, d1,
                           [col[j * d2 + i] for i in range(d2)
                            for j in range(d1)]))
    return mats
