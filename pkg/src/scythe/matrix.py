"""Dense exact matrices over a FieldSpec, with row-reduction kernels.

Blocks coming off a reduction are small but often mostly zero, so the
inner loops skip zero entries; asymptotically this is still the naive
cubic algorithm (reports quote omega = 3).
"""

from .errors import SolveFailed


class Matrix:
    """An immutable rows x cols matrix with entries in a fixed field.

    Entries are stored row-major as a list of row lists.  Nothing mutates
    a Matrix after construction; every operation returns a fresh one.
    """

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field, rows, cols, data):
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError("entry grid does not match %dx%d" % (rows, cols))
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def zeros(cls, field, rows, cols):
        z = field.zero
        return cls(field, rows, cols, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        data = [[z] * n for _ in range(n)]
        for i in range(n):
            data[i][i] = o
        return cls(field, n, n, data)

    @classmethod
    def from_rows(cls, field, rows_of_ints):
        data = [[field.from_int(v) for v in row] for row in rows_of_ints]
        r = len(data)
        c = len(data[0]) if data else 0
        return cls(field, r, c, data)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, tuple(map(tuple, self.data))))

    def __repr__(self):
        body = "; ".join(
            " ".join(self.field.format(v) for v in row) for row in self.data
        )
        return "Matrix(%dx%d [%s])" % (self.rows, self.cols, body)

    def is_zero(self):
        z = self.field.zero
        return all(v == z for row in self.data for v in row)

    def copy_data(self):
        return [row[:] for row in self.data]

    def transpose(self):
        data = [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)]
        return Matrix(self.field, self.cols, self.rows, data)

    def add(self, other):
        _check_same_shape(self, other)
        f = self.field
        data = [
            [f.add(a, b) for a, b in zip(ra, rb)]
            for ra, rb in zip(self.data, other.data)
        ]
        return Matrix(f, self.rows, self.cols, data)

    def sub(self, other):
        _check_same_shape(self, other)
        f = self.field
        data = [
            [f.sub(a, b) for a, b in zip(ra, rb)]
            for ra, rb in zip(self.data, other.data)
        ]
        return Matrix(f, self.rows, self.cols, data)

    def neg(self):
        f = self.field
        data = [[f.neg(v) for v in row] for row in self.data]
        return Matrix(f, self.rows, self.cols, data)

    def column(self, j):
        return [self.data[i][j] for i in range(self.rows)]

    def to_json(self):
        return [[self.field.format(v) for v in row] for row in self.data]


def _check_same_shape(a, b):
    if a.field != b.field:
        raise ValueError("field mismatch")
    if a.rows != b.rows or a.cols != b.cols:
        raise ValueError("shape mismatch %dx%d vs %dx%d" % (a.rows, a.cols, b.rows, b.cols))


def mat_mul(a, b):
    """Exact matrix product, skipping zero entries of the left factor."""
    if a.field != b.field:
        raise ValueError("field mismatch")
    if a.cols != b.rows:
        raise ValueError("inner dimensions %d vs %d" % (a.cols, b.rows))
    f = a.field
    z = f.zero
    out = [[z] * b.cols for _ in range(a.rows)]
    bd = b.data
    for i in range(a.rows):
        arow = a.data[i]
        orow = out[i]
        for k in range(a.cols):
            aik = arow[k]
            if aik == z:
                continue
            brow = bd[k]
            for j in range(b.cols):
                bkj = brow[j]
                if bkj != z:
                    orow[j] = f.add(orow[j], f.mul(aik, bkj))
    return Matrix(f, a.rows, b.cols, out)


def matvec(a, vec):
    """Apply a to a coordinate vector given as a plain list."""
    if len(vec) != a.cols:
        raise ValueError("vector length %d, matrix wants %d" % (len(vec), a.cols))
    f = a.field
    z = f.zero
    out = []
    for row in a.data:
        acc = z
        for j, rv in enumerate(row):
            if rv != z and vec[j] != z:
                acc = f.add(acc, f.mul(rv, vec[j]))
        out.append(acc)
    return out


def try_invert(a):
    """Exact two-sided inverse, or None when the matrix has none.

    Non-square input also yields None; the caller decides whether that is
    exceptional.
    """
    if a.rows != a.cols:
        return None
    n = a.rows
    f = a.field
    z = f.zero
    work = a.copy_data()
    inv = Matrix.identity(f, n).copy_data()
    for col in range(n):
        pivot = None
        for i in range(col, n):
            if work[i][col] != z:
                pivot = i
                break
        if pivot is None:
            return None
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            inv[col], inv[pivot] = inv[pivot], inv[col]
        pv = work[col][col]
        if pv != f.one:
            pinv = f.inv(pv)
            work[col] = [f.mul(pinv, v) for v in work[col]]
            inv[col] = [f.mul(pinv, v) for v in inv[col]]
        wc, ic = work[col], inv[col]
        for i in range(n):
            if i == col:
                continue
            factor = work[i][col]
            if factor == z:
                continue
            wi, ii = work[i], inv[i]
            for j in range(n):
                if wc[j] != z:
                    wi[j] = f.sub(wi[j], f.mul(factor, wc[j]))
                if ic[j] != z:
                    ii[j] = f.sub(ii[j], f.mul(factor, ic[j]))
    return Matrix(f, n, n, inv)


def rank(a):
    """Exact rank via forward elimination."""
    f = a.field
    z = f.zero
    work = a.copy_data()
    r = 0
    for col in range(a.cols):
        pivot = None
        for i in range(r, a.rows):
            if work[i][col] != z:
                pivot = i
                break
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        prow = work[r]
        pinv = f.inv(prow[col])
        for i in range(r + 1, a.rows):
            factor = work[i][col]
            if factor == z:
                continue
            scale = f.mul(factor, pinv)
            wi = work[i]
            for j in range(col, a.cols):
                if prow[j] != z:
                    wi[j] = f.sub(wi[j], f.mul(scale, prow[j]))
        r += 1
        if r == a.rows:
            break
    return r


class EchelonSolver:
    """Reduced row echelon factorization of one matrix, built once and reused.

    Stores E with E·A in reduced echelon form, the pivot columns, and the
    rank; answers kernel bases and solves A·x = b without re-eliminating.
    """

    def __init__(self, a):
        f = a.field
        z = f.zero
        work = a.copy_data()
        trans = Matrix.identity(f, a.rows).copy_data()
        pivots = []
        r = 0
        for col in range(a.cols):
            pivot = None
            for i in range(r, a.rows):
                if work[i][col] != z:
                    pivot = i
                    break
            if pivot is None:
                continue
            work[r], work[pivot] = work[pivot], work[r]
            trans[r], trans[pivot] = trans[pivot], trans[r]
            pv = work[r][col]
            if pv != f.one:
                pinv = f.inv(pv)
                work[r] = [f.mul(pinv, v) for v in work[r]]
                trans[r] = [f.mul(pinv, v) for v in trans[r]]
            wr, tr = work[r], trans[r]
            for i in range(a.rows):
                if i == r:
                    continue
                factor = work[i][col]
                if factor == z:
                    continue
                wi, ti = work[i], trans[i]
                for j in range(a.cols):
                    if wr[j] != z:
                        wi[j] = f.sub(wi[j], f.mul(factor, wr[j]))
                for j in range(a.rows):
                    if tr[j] != z:
                        ti[j] = f.sub(ti[j], f.mul(factor, tr[j]))
            pivots.append(col)
            r += 1
        self.field = f
        self.rows = a.rows
        self.cols = a.cols
        self.rref = work
        self.transform = trans
        self.pivots = pivots
        self.rank = r

    def kernel_basis(self):
        """Columns spanning the kernel, one per free column, as a Matrix.

        The basis vector for free column j has a 1 in slot j, so distinct
        vectors are visibly independent.
        """
        f = self.field
        z = f.zero
        pivot_set = set(self.pivots)
        free = [j for j in range(self.cols) if j not in pivot_set]
        cols = []
        for j in free:
            vec = [z] * self.cols
            vec[j] = f.one
            for i, pc in enumerate(self.pivots):
                vec[pc] = f.neg(self.rref[i][j])
            cols.append(vec)
        data = [[cols[k][i] for k in range(len(free))] for i in range(self.cols)]
        return Matrix(f, self.cols, len(free), data)

    def solve(self, b):
        """One solution x of A·x = b (free variables zero), or None if none."""
        if len(b) != self.rows:
            raise SolveFailed("rhs length %d, expected %d" % (len(b), self.rows))
        f = self.field
        z = f.zero
        eb = []
        for i in range(self.rows):
            ti = self.transform[i]
            acc = z
            for j in range(self.rows):
                tij = ti[j]
                if tij != z and b[j] != z:
                    acc = f.add(acc, f.mul(tij, b[j]))
            eb.append(acc)
        for i in range(self.rank, self.rows):
            if eb[i] != z:
                return None
        x = [z] * self.cols
        for i, pc in enumerate(self.pivots):
            x[pc] = eb[i]
        return x

    def in_image(self, b):
        return self.solve(b) is not None
