"""Exact dense linear algebra over the fields of :mod:`repdim.fields`.

Matrices are dense row-major lists of payloads sharing one field.  Row
reduction over characteristic zero uses Bareiss-style pivoting (divisions by
the previous pivot, exact in the field) to control coefficient blowup before
a final normalization pass; over F_p plain Gaussian elimination is used,
vectorized through numpy int64 arrays (exact: all entries stay below 2^63).
Pivots are always the first nonzero entry in column order, so every echelon
form, kernel basis and rank is deterministic given the input ordering.
"""

import numpy as np

from .fields import DimensionMismatch, FieldMismatch


class Matrix:
    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field, rows, cols, data):
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = data

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, field, rows, cols):
        z = field.zero
        return cls(field, rows, cols, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field, n):
        m = cls.zero(field, n, n)
        for i in range(n):
            m.data[i][i] = field.one
        return m

    @classmethod
    def from_rows(cls, field, rows):
        data = [[field.from_int(e) if isinstance(e, int) else e for e in row] for row in rows]
        cols = len(data[0]) if data else 0
        return cls(field, len(data), cols, data)

    @classmethod
    def column(cls, field, entries):
        return cls(field, len(entries), 1, [[e] for e in entries])

    def copy(self):
        return Matrix(self.field, self.rows, self.cols, [row[:] for row in self.data])

    # -- basic algebra -------------------------------------------------

    def _check(self, other):
        if other.field != self.field:
            raise FieldMismatch("matrices over different fields")

    def __add__(self, other):
        self._check(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch in add")
        f = self.field
        return Matrix(
            f,
            self.rows,
            self.cols,
            [
                [f.add(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ],
        )

    def __sub__(self, other):
        return self + other.scale(self.field.neg(self.field.one))

    def scale(self, c):
        f = self.field
        return Matrix(
            f, self.rows, self.cols, [[f.mul(c, e) for e in row] for row in self.data]
        )

    def __mul__(self, other):
        self._check(other)
        if self.cols != other.rows:
            raise DimensionMismatch(
                "cannot multiply %dx%d by %dx%d" % (self.rows, self.cols, other.rows, other.cols)
            )
        f = self.field
        if f.kind == "prime":
            a = to_numpy(self)
            b = to_numpy(other)
            return from_numpy(f, _np_matmul_mod(a, b, f.p))
        out = Matrix.zero(f, self.rows, other.cols)
        odata = out.data
        bdata = other.data
        for i, row in enumerate(self.data):
            orow = odata[i]
            for k, c in enumerate(row):
                if f.is_zero(c):
                    continue
                brow = bdata[k]
                for j, b in enumerate(brow):
                    if not f.is_zero(b):
                        orow[j] = f.add(orow[j], f.mul(c, b))
        return out

    def transpose(self):
        return Matrix(
            self.field,
            self.cols,
            self.rows,
            [list(col) for col in zip(*self.data)] if self.data else [],
        )

    def is_zero(self):
        f = self.field
        return all(f.is_zero(e) for row in self.data for e in row)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and other.field == self.field
            and other.rows == self.rows
            and other.cols == self.cols
            and other.data == self.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def __repr__(self):
        return "Matrix(%s, %dx%d)" % (self.field, self.rows, self.cols)

    def hstack(self, other):
        self._check(other)
        if self.rows != other.rows:
            raise DimensionMismatch("hstack row mismatch")
        return Matrix(
            self.field,
            self.rows,
            self.cols + other.cols,
            [ra + rb for ra, rb in zip(self.data, other.data)],
        )

    def vstack(self, other):
        self._check(other)
        if self.cols != other.cols:
            raise DimensionMismatch("vstack col mismatch")
        return Matrix(
            self.field,
            self.rows + other.rows,
            self.cols,
            [row[:] for row in self.data] + [row[:] for row in other.data],
        )

    def submatrix(self, row_idx, col_idx):
        return Matrix(
            self.field,
            len(row_idx),
            len(col_idx),
            [[self.data[i][j] for j in col_idx] for i in row_idx],
        )

    def apply(self, vec):
        """Matrix times a plain payload vector (list)."""
        f = self.field
        out = [f.zero] * self.rows
        for i, row in enumerate(self.data):
            acc = f.zero
            for a, x in zip(row, vec):
                if not (f.is_zero(a) or f.is_zero(x)):
                    acc = f.add(acc, f.mul(a, x))
            out[i] = acc
        return out


# -- numpy bridge for prime fields ------------------------------------


def to_numpy(m):
    return np.array(m.data, dtype=np.int64).reshape(m.rows, m.cols)


def from_numpy(field, a):
    return Matrix(field, a.shape[0], a.shape[1], [[int(x) for x in row] for row in a])


def _np_matmul_mod(a, b, p):
    # block the inner dimension so int64 accumulation cannot overflow
    step = max(1, (1 << 62) // max(1, (p - 1) * (p - 1)))
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for start in range(0, a.shape[1], step):
        out = (out + a[:, start : start + step] @ b[start : start + step, :]) % p
    return out


def _np_rref(a, p):
    """Reduced row echelon form mod p.  Returns (array, pivot column list)."""
    a = a % p
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        nz = np.nonzero(a[r:, c])[0]
        if len(nz) == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            a[mask] = (a[mask] - np.outer(col[mask], a[r])) % p
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


# -- generic elimination ----------------------------------------------


def _rref_generic(field, data, cols):
    """In-place fraction-controlled elimination to RREF.

    Forward pass is Bareiss-style: after eliminating with pivot p_k, every
    updated entry is divided by the previous pivot, which is exact and keeps
    intermediate values the size of minors.  The final pass normalizes pivots
    to 1 and back-eliminates.
    """
    rows = len(data)
    pivots = []
    prev = field.one
    r = 0
    for c in range(cols):
        sel = None
        for i in range(r, rows):
            if not field.is_zero(data[i][c]):
                sel = i
                break
        if sel is None:
            continue
        if sel != r:
            data[r], data[sel] = data[sel], data[r]
        piv = data[r][c]
        for i in range(r + 1, rows):
            head = data[i][c]
            if field.is_zero(head):
                # untouched rows keep their entries; the division by prev is
                # only applied to combined rows, where it is exact
                continue
            row_i = data[i]
            row_r = data[r]
            for j in range(c + 1, cols):
                num = field.sub(field.mul(piv, row_i[j]), field.mul(head, row_r[j]))
                row_i[j] = field.div(num, prev)
            row_i[c] = field.zero
        prev = piv
        pivots.append(c)
        r += 1
        if r == rows:
            break
    # normalize and back-eliminate
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        inv = field.inv(data[k][c])
        row = data[k]
        for j in range(c, cols):
            if not field.is_zero(row[j]):
                row[j] = field.mul(inv, row[j])
        for i in range(k):
            head = data[i][c]
            if field.is_zero(head):
                continue
            row_i = data[i]
            for j in range(c, cols):
                if not field.is_zero(row[j]):
                    row_i[j] = field.sub(row_i[j], field.mul(head, row[j]))
    return pivots


def rref(m):
    """Reduced row echelon form.  Returns (Matrix, pivot columns)."""
    f = m.field
    if f.kind == "prime":
        a, pivots = _np_rref(to_numpy(m), f.p)
        return from_numpy(f, a), pivots
    data = [row[:] for row in m.data]
    pivots = _rref_generic(f, data, m.cols)
    return Matrix(f, m.rows, m.cols, data), pivots


def rank(m):
    return len(rref(m)[1])


def kernel(m):
    """Basis of the right null space, as a list of payload vectors, in
    reduced echelon order (deterministic)."""
    f = m.field
    r, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [f.zero] * m.cols
        vec[fc] = f.one
        for k, pc in enumerate(pivots):
            coeff = r.data[k][fc]
            if not f.is_zero(coeff):
                vec[pc] = f.neg(coeff)
        basis.append(vec)
    return basis


def solve(a, b):
    """One particular solution x with a·x = b (b a Matrix of column(s)),
    or None when inconsistent."""
    if a.rows != b.rows:
        raise DimensionMismatch("solve: row mismatch")
    f = a.field
    aug = a.hstack(b)
    r, pivots = rref(aug)
    n = a.cols
    for k, pc in enumerate(pivots):
        if pc >= n:
            return None
    x = Matrix.zero(f, n, b.cols)
    for k, pc in enumerate(pivots):
        for j in range(b.cols):
            x.data[pc][j] = r.data[k][n + j]
    return x


def solve_and_kernel(a, b=None):
    """Exact row reduction bundle: particular solution (when b given and
    consistent), kernel basis, rank."""
    out = {"rank": rank(a), "kernel": kernel(a)}
    if b is not None:
        out["solution"] = solve(a, b)
    return out


def inverse(m):
    if m.rows != m.cols:
        raise DimensionMismatch("inverse of non-square matrix")
    x = solve(m, Matrix.identity(m.field, m.rows))
    if x is None:
        return None
    return x


def is_invertible(m):
    return m.rows == m.cols and rank(m) == m.rows


def row_space(m):
    """Rows of the RREF restricted to the nonzero ones, plus pivot columns."""
    r, pivots = rref(m)
    return [r.data[k] for k in range(len(pivots))], pivots


def reduce_vector(field, rows, pivots, vec):
    """Reduce vec against RREF rows; returns the residue (zero iff in span)."""
    vec = list(vec)
    for k, pc in enumerate(pivots):
        c = vec[pc]
        if field.is_zero(c):
            continue
        row = rows[k]
        for j in range(pc, len(vec)):
            if not field.is_zero(row[j]):
                vec[j] = field.sub(vec[j], field.mul(c, row[j]))
    return vec


def kernel_from_sparse_rows(field, rows, ncols):
    """Kernel basis of a linear system given as sparse rows ({col: payload}).

    Same reduced echelon convention as kernel(); intended for the large but
    very sparse systems arising from intertwiner equations over fields with
    no fast dense path.
    """
    pivot_rows = {}  # pivot column -> normalized sparse row
    for row in rows:
        row = {c: v for c, v in row.items() if not field.is_zero(v)}
        while row:
            lead = min(row)
            if lead not in pivot_rows:
                break
            c = row[lead]
            for j, v in pivot_rows[lead].items():
                w = field.sub(row.get(j, field.zero), field.mul(c, v))
                if field.is_zero(w):
                    row.pop(j, None)
                else:
                    row[j] = w
        if row:
            lead = min(row)
            inv = field.inv(row[lead])
            pivot_rows[lead] = {j: field.mul(inv, v) for j, v in row.items()}
    # back-eliminate pivot columns from earlier rows for a fully reduced form
    for pc in sorted(pivot_rows, reverse=True):
        prow = pivot_rows[pc]
        for qc in pivot_rows:
            if qc >= pc:
                continue
            qrow = pivot_rows[qc]
            c = qrow.get(pc)
            if c is None or field.is_zero(c):
                continue
            for j, v in prow.items():
                w = field.sub(qrow.get(j, field.zero), field.mul(c, v))
                if field.is_zero(w):
                    qrow.pop(j, None)
                else:
                    qrow[j] = w
    pivots = sorted(pivot_rows)
    pivot_set = set(pivots)
    basis = []
    for fc in range(ncols):
        if fc in pivot_set:
            continue
        vec = [field.zero] * ncols
        vec[fc] = field.one
        for pc in pivots:
            coeff = pivot_rows[pc].get(fc)
            if coeff is not None and not field.is_zero(coeff):
                vec[pc] = field.neg(coeff)
        basis.append(vec)
    return basis


class Subspace:
    """A subspace of k^n kept in RREF; supports membership and extension."""

    def __init__(self, field, ambient):
        self.field = field
        self.ambient = ambient
        self.rows = []
        self.pivots = []

    @classmethod
    def from_vectors(cls, field, ambient, vectors):
        s = cls(field, ambient)
        for v in vectors:
            s.add(v)
        return s

    @property
    def dim(self):
        return len(self.rows)

    def contains(self, vec):
        res = reduce_vector(self.field, self.rows, self.pivots, vec)
        return all(self.field.is_zero(c) for c in res)

    def add(self, vec):
        """Insert a vector; returns True when it enlarged the space."""
        f = self.field
        res = reduce_vector(f, self.rows, self.pivots, vec)
        for c in range(self.ambient):
            if not f.is_zero(res[c]):
                inv = f.inv(res[c])
                res = [f.mul(inv, x) for x in res]
                # keep RREF: eliminate column c from existing rows, insert sorted
                for row in self.rows:
                    h = row[c]
                    if not f.is_zero(h):
                        for j in range(self.ambient):
                            if not f.is_zero(res[j]):
                                row[j] = f.sub(row[j], f.mul(h, res[j]))
                pos = 0
                while pos < len(self.pivots) and self.pivots[pos] < c:
                    pos += 1
                self.rows.insert(pos, res)
                self.pivots.insert(pos, c)
                return True
        return False

    def basis_matrix(self):
        return Matrix(self.field, len(self.rows), self.ambient, [r[:] for r in self.rows])
