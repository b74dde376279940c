"""Exact fields, dense matrices, and cohomology of finite cochain complexes.

Scalars are exact: F_p elements are canonical ints in [0, p), rationals are
Fractions in lowest terms (plain ints stand in for integral rationals).  No
floating point appears anywhere in the library.

Everything is immutable after construction and every operation returns fresh
values, so all of this is safe to use concurrently and to move across
threads.
"""

from fractions import Fraction

from cotorlab import kernels
from cotorlab.errors import InputError


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Field:
    """The ground field: F_p for a prime p, or Q (p is None)."""

    __slots__ = ("p",)
    _cache = {}

    def __new__(cls, p=None):
        if p is not None:
            if p >= 2 ** 31:
                raise InputError(f"prime {p} too large (needs p < 2^31)")
            if not _is_prime(p):
                raise InputError(f"{p} is not prime")
        if p not in cls._cache:
            obj = object.__new__(cls)
            obj_p = p
            object.__setattr__(obj, "p", obj_p)
            cls._cache[p] = obj
        return cls._cache[p]

    def __setattr__(self, name, value):
        raise AttributeError("Field is immutable")

    @classmethod
    def fp(cls, p):
        return cls(p)

    @classmethod
    def rationals(cls):
        return cls(None)

    @property
    def is_prime_field(self):
        return self.p is not None

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def coerce(self, v):
        """Canonical representative of v: int in [0,p) or reduced rational."""
        if self.p is not None:
            if isinstance(v, Fraction):
                if v.denominator % self.p == 0:
                    raise InputError(f"denominator of {v} vanishes mod {self.p}")
                return (v.numerator * pow(v.denominator, self.p - 2, self.p)) % self.p
            return int(v) % self.p
        if isinstance(v, Fraction):
            return int(v) if v.denominator == 1 else v
        return int(v)

    def add(self, a, b):
        return (a + b) % self.p if self.p is not None else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p is not None else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p is not None else a * b

    def neg(self, a):
        return (-a) % self.p if self.p is not None else -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverting zero")
        if self.p is not None:
            return pow(a, self.p - 2, self.p)
        r = Fraction(1) / Fraction(a)
        return int(r) if r.denominator == 1 else r

    def __repr__(self):
        return f"F_{self.p}" if self.p is not None else "Q"


class Matrix:
    """Immutable dense matrix over a Field, entries flat row-major."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field, rows, cols, entries):
        entries = tuple(field.coerce(v) for v in entries)
        if len(entries) != rows * cols:
            raise InputError(f"{rows}x{cols} matrix needs {rows * cols} entries, "
                             f"got {len(entries)}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def _raw(cls, field, rows, cols, entries):
        # trusted path: entries already canonical
        obj = object.__new__(cls)
        object.__setattr__(obj, "field", field)
        object.__setattr__(obj, "rows", rows)
        object.__setattr__(obj, "cols", cols)
        object.__setattr__(obj, "entries", tuple(entries))
        return obj

    @classmethod
    def from_rows(cls, field, row_lists):
        rows = len(row_lists)
        cols = len(row_lists[0]) if rows else 0
        for r in row_lists:
            if len(r) != cols:
                raise InputError("ragged rows")
        return cls(field, rows, cols, [v for r in row_lists for v in r])

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls._raw(field, rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, field, n):
        e = [0] * (n * n)
        for i in range(n):
            e[i * n + i] = 1
        return cls._raw(field, n, n, e)

    @classmethod
    def from_columns(cls, field, col_lists, rows):
        cols = len(col_lists)
        e = [0] * (rows * cols)
        for j, col in enumerate(col_lists):
            if len(col) != rows:
                raise InputError("column length mismatch")
            for i, v in enumerate(col):
                e[i * cols + j] = v
        return cls(field, rows, cols, e)

    def entry(self, i, j):
        return self.entries[i * self.cols + j]

    def to_rows(self):
        n = self.cols
        return [list(self.entries[i * n:(i + 1) * n]) for i in range(self.rows)]

    def column(self, j):
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def is_zero(self):
        return all(v == 0 for v in self.entries)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field is other.field
                and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.field.p, self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"Matrix({self.field}, {self.rows}x{self.cols})"

    def _check_same_shape(self, other):
        if not isinstance(other, Matrix):
            raise InputError("expected a Matrix")
        if self.field is not other.field:
            raise InputError("field mismatch")
        if self.rows != other.rows or self.cols != other.cols:
            raise InputError(f"shape mismatch: {self.rows}x{self.cols} "
                             f"vs {other.rows}x{other.cols}")

    def __add__(self, other):
        self._check_same_shape(other)
        f = self.field
        return Matrix._raw(f, self.rows, self.cols,
                           (f.add(a, b) for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        self._check_same_shape(other)
        f = self.field
        return Matrix._raw(f, self.rows, self.cols,
                           (f.sub(a, b) for a, b in zip(self.entries, other.entries)))

    def __neg__(self):
        f = self.field
        return Matrix._raw(f, self.rows, self.cols, (f.neg(a) for a in self.entries))

    def scale(self, c):
        f = self.field
        c = f.coerce(c)
        return Matrix._raw(f, self.rows, self.cols, (f.mul(c, a) for a in self.entries))

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.field is not other.field:
            raise InputError("field mismatch in product")
        if self.cols != other.rows:
            raise InputError(f"shape mismatch: {self.rows}x{self.cols} "
                             f"times {other.rows}x{other.cols}")
        f = self.field
        if f.p is not None:
            flat = kernels.fp_matmul(self.entries, self.rows, self.cols,
                                     other.entries, other.cols, f.p)
        else:
            flat = kernels.q_matmul(self.entries, self.rows, self.cols,
                                    other.entries, other.cols)
            flat = [f.coerce(v) for v in flat]
        return Matrix._raw(f, self.rows, other.cols, flat)

    def mul_vector(self, vec):
        if len(vec) != self.cols:
            raise InputError("vector length mismatch")
        f = self.field
        out = []
        for i in range(self.rows):
            s = 0
            base = i * self.cols
            for j, v in enumerate(vec):
                if v:
                    s = s + self.entries[base + j] * v
            out.append(f.coerce(s))
        return tuple(out)

    def transpose(self):
        m, n = self.rows, self.cols
        e = [0] * (m * n)
        for i in range(m):
            for j in range(n):
                e[j * m + i] = self.entries[i * n + j]
        return Matrix._raw(self.field, n, m, e)

    def kron(self, other):
        """Kronecker product; realizes the left-major lexicographic tensor basis."""
        if self.field is not other.field:
            raise InputError("field mismatch in tensor product")
        f = self.field
        m1, n1, m2, n2 = self.rows, self.cols, other.rows, other.cols
        e = [0] * (m1 * m2 * n1 * n2)
        for i1 in range(m1):
            for j1 in range(n1):
                a = self.entries[i1 * n1 + j1]
                if a == 0:
                    continue
                for i2 in range(m2):
                    for j2 in range(n2):
                        b = other.entries[i2 * n2 + j2]
                        if b != 0:
                            e[(i1 * m2 + i2) * (n1 * n2) + (j1 * n2 + j2)] = f.mul(a, b)
        return Matrix._raw(f, m1 * m2, n1 * n2, e)

    @classmethod
    def vstack(cls, mats):
        mats = list(mats)
        field, cols = mats[0].field, mats[0].cols
        for m in mats:
            if m.cols != cols or m.field is not field:
                raise InputError("vstack mismatch")
        e = []
        for m in mats:
            e.extend(m.entries)
        return cls._raw(field, sum(m.rows for m in mats), cols, e)

    @classmethod
    def hstack(cls, mats):
        mats = list(mats)
        field, rows = mats[0].field, mats[0].rows
        for m in mats:
            if m.rows != rows or m.field is not field:
                raise InputError("hstack mismatch")
        e = []
        for i in range(rows):
            for m in mats:
                e.extend(m.entries[i * m.cols:(i + 1) * m.cols])
        return cls._raw(field, rows, sum(m.cols for m in mats), e)

    def rank(self):
        f = self.field
        if f.p is not None:
            return kernels.fp_rank(self.entries, self.rows, self.cols, f.p)
        return kernels.q_rank(self.entries, self.rows, self.cols)

    def rref(self):
        """Reduced row echelon form; returns (Matrix, pivot column indices)."""
        f = self.field
        if f.p is not None:
            flat, piv = kernels.fp_rref(self.entries, self.rows, self.cols, f.p)
        else:
            flat, piv = kernels.q_rref(self.entries, self.rows, self.cols)
            flat = [f.coerce(v) for v in flat]
        return Matrix._raw(f, self.rows, self.cols, flat), piv

    def kernel_basis(self):
        """Columns form the canonical (RREF-derived) basis of the null space."""
        f = self.field
        n = self.cols
        if self.rows == 0 or n == 0:
            return Matrix.identity(f, n)
        red, pivots = self.rref()
        pivset = set(pivots)
        free = [j for j in range(n) if j not in pivset]
        e = [0] * (n * len(free))
        width = len(free)
        for idx, j in enumerate(free):
            e[j * width + idx] = 1
            for r, c in enumerate(pivots):
                e[c * width + idx] = f.neg(red.entry(r, j))
        return Matrix._raw(f, n, width, e)

    def solve(self, b):
        """Some x with self.x = b, or None if inconsistent."""
        if len(b) != self.rows:
            raise InputError("right-hand side length mismatch")
        f = self.field
        aug = Matrix.hstack([self, Matrix(f, self.rows, 1, list(b))])
        red, pivots = aug.rref()
        if self.cols in pivots:
            return None
        x = [0] * self.cols
        for r, c in enumerate(pivots):
            x[c] = red.entry(r, self.cols)
        return tuple(x)

    def inverse(self):
        if self.rows != self.cols:
            raise InputError("inverse of a non-square matrix")
        n = self.rows
        aug = Matrix.hstack([self, Matrix.identity(self.field, n)])
        red, pivots = aug.rref()
        if pivots != list(range(n)):
            raise InputError("matrix is singular")
        e = []
        for i in range(n):
            e.extend(red.entries[i * 2 * n + n:(i + 1) * 2 * n])
        return Matrix._raw(self.field, n, n, e)

    def submatrix(self, row_idx, col_idx):
        e = []
        for i in row_idx:
            base = i * self.cols
            for j in col_idx:
                e.append(self.entries[base + j])
        return Matrix._raw(self.field, len(row_idx), len(col_idx), e)


class CochainComplex:
    """Finite cochain complex: consecutive degrees, d(i): C^i -> C^{i+1}.

    dims lists the space dimensions from min_degree upward; differentials[i]
    maps the i-th space to the (i+1)-st.  d.d = 0 is asserted on construction
    and a violation raises immediately, never producing a silent result.
    """

    __slots__ = ("field", "min_degree", "dims", "differentials")

    def __init__(self, field, min_degree, dims, differentials, check=True):
        dims = tuple(int(d) for d in dims)
        differentials = tuple(differentials)
        if len(differentials) != max(len(dims) - 1, 0):
            raise InputError("need exactly one differential per adjacent degree pair")
        for i, d in enumerate(differentials):
            if d.cols != dims[i] or d.rows != dims[i + 1]:
                raise InputError(f"differential {i} has shape {d.rows}x{d.cols}, "
                                 f"expected {dims[i + 1]}x{dims[i]}")
        if check:
            for i in range(len(differentials) - 1):
                if not (differentials[i + 1] * differentials[i]).is_zero():
                    raise InputError(f"d.d != 0 between degrees {min_degree + i} "
                                     f"and {min_degree + i + 2}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "min_degree", int(min_degree))
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "differentials", differentials)

    def __setattr__(self, name, value):
        raise AttributeError("CochainComplex is immutable")

    @property
    def max_degree(self):
        return self.min_degree + len(self.dims) - 1

    def degrees(self):
        return list(range(self.min_degree, self.max_degree + 1))

    def _index(self, n):
        i = n - self.min_degree
        if i < 0 or i >= len(self.dims):
            raise InputError(f"degree {n} outside stored range "
                             f"[{self.min_degree}, {self.max_degree}]")
        return i

    def outgoing(self, n):
        """d^n, or None at the top degree (treated as the zero map)."""
        i = self._index(n)
        return self.differentials[i] if i < len(self.differentials) else None

    def incoming(self, n):
        """d^{n-1}, or None at the bottom degree."""
        i = self._index(n)
        return self.differentials[i - 1] if i > 0 else None

    def cohomology_dim(self, n):
        i = self._index(n)
        d_out = self.outgoing(n)
        d_in = self.incoming(n)
        ker = self.dims[i] - (d_out.rank() if d_out is not None else 0)
        return ker - (d_in.rank() if d_in is not None else 0)

    def cohomology_basis(self, n):
        """Columns are cocycles whose classes form a basis of H^n."""
        i = self._index(n)
        d_out = self.outgoing(n)
        d_in = self.incoming(n)
        dim = self.dims[i]
        if d_out is not None:
            ker = d_out.kernel_basis()
        else:
            ker = Matrix.identity(self.field, dim)
        if d_in is None or d_in.cols == 0:
            return ker
        # pick kernel columns extending a basis of the coboundary space
        stacked = Matrix.hstack([d_in, ker])
        _, pivots = stacked.rref()
        chosen = [j - d_in.cols for j in pivots if j >= d_in.cols]
        return ker.submatrix(range(ker.rows), chosen)
