"""Poset-parametrized cochain complexes and their assembled coboundaries.

A Parametrization attaches a free module of some rank to each poset element
and a matrix to each covering pair; missing pairs are zero maps.  assemble
stacks the blocks into one matrix per dimension, ordering cells by id.
"""

from .errors import ValidationError
from .matrix import Matrix, mat_mul


class Layout:
    """Ordered coordinates of one graded piece: cells sorted by id with offsets."""

    def __init__(self, cells_with_ranks):
        self.cells = []
        self.offsets = {}
        self.ranks = {}
        total = 0
        for cell, rank in cells_with_ranks:
            self.cells.append(cell)
            self.offsets[cell] = total
            self.ranks[cell] = rank
            total += rank
        self.total = total

    def __contains__(self, cell):
        return cell in self.offsets

    def slot(self, cell):
        off = self.offsets[cell]
        return off, off + self.ranks[cell]


class Parametrization:
    """Stalk ranks and covering-pair matrices over a graded poset.

    Only the reduction engine may mutate one, and it requires exclusive
    ownership; everything else treats instances as read-only.
    """

    def __init__(self, field, poset, stalk_rank, maps):
        for x in poset.dims:
            if stalk_rank.get(x, None) is None or stalk_rank[x] < 0:
                raise ValidationError("missing or negative rank for %r" % (x,))
        for (x, y), m in maps.items():
            if not poset.has_cover(x, y):
                raise ValidationError("map on non-covering pair (%s, %s)" % (x, y))
            if m.rows != stalk_rank[y] or m.cols != stalk_rank[x]:
                raise ValidationError(
                    "map (%s, %s) has shape %dx%d, stalks demand %dx%d"
                    % (x, y, m.rows, m.cols, stalk_rank[y], stalk_rank[x])
                )
            if m.field != field:
                raise ValidationError("map (%s, %s) over the wrong field" % (x, y))
        self.field = field
        self.poset = poset
        self.stalk_rank = stalk_rank
        self.maps = maps

    def copy(self):
        return Parametrization(
            self.field, self.poset.copy(), dict(self.stalk_rank), dict(self.maps)
        )

    def rank_of(self, x):
        return self.stalk_rank[x]

    def map_of(self, x, y):
        """The matrix attached to (x, y); absent covers give the zero map."""
        m = self.maps.get((x, y))
        if m is None:
            return Matrix.zeros(self.field, self.stalk_rank[y], self.stalk_rank[x])
        return m

    def layout(self, n):
        cells = self.poset.elements_of_dim(n)
        return Layout([(c, self.stalk_rank[c]) for c in cells])

    def max_dim(self):
        return self.poset.max_dim()

    def max_stalk_rank(self):
        """Largest stalk rank, the parameter d of the complexity bound."""
        return max(self.stalk_rank.values(), default=0)

    def assemble(self):
        """Stack covering-pair blocks into per-dimension coboundary matrices."""
        top = self.max_dim()
        layouts = {n: self.layout(n) for n in range(top + 1)}
        deltas = {}
        z = self.field.zero
        for n in range(top):
            src, dst = layouts[n], layouts[n + 1]
            data = [[z] * src.total for _ in range(dst.total)]
            for (x, y), m in self.maps.items():
                if x in src and y in dst:
                    r0, _ = dst.slot(y)
                    c0, _ = src.slot(x)
                    for i in range(m.rows):
                        row = data[r0 + i]
                        mrow = m.data[i]
                        for j in range(m.cols):
                            row[c0 + j] = mrow[j]
            deltas[n] = Matrix(self.field, dst.total, src.total, data)
        return CochainComplex(self.field, layouts, deltas)


class CochainComplex:
    """Assembled coboundary matrices d^n with the layouts indexing their blocks."""

    def __init__(self, field, layouts, deltas):
        self.field = field
        self.layouts = layouts
        self.deltas = deltas
        self.top = max(layouts, default=-1)
        self._cache = {}

    def layout(self, n):
        if n in self.layouts:
            return self.layouts[n]
        return Layout([])

    def rank_c(self, n):
        return self.layout(n).total

    def d(self, n):
        """The coboundary C^n -> C^{n+1}, zero-shaped outside the range."""
        if n in self.deltas:
            return self.deltas[n]
        return Matrix.zeros(self.field, self.rank_c(n + 1), self.rank_c(n))


class SquareReport:
    """Outcome of a d-squared check; truthy iff every product block vanished."""

    def __init__(self, witnesses):
        self.witnesses = witnesses

    def __bool__(self):
        return not self.witnesses

    def __repr__(self):
        if self.witnesses:
            return "SquareReport(failures=%r)" % (self.witnesses,)
        return "SquareReport(ok)"


def verify_d_squared(cx):
    """Check d^{n+1} . d^n = 0 for all n, reporting nonzero blocks.

    Witnesses are (n, target cell, source cell) naming the offending block
    of the composite from C^n into C^{n+2}.
    """
    witnesses = []
    z = cx.field.zero
    for n in range(cx.top):
        prod = mat_mul(cx.d(n + 1), cx.d(n))
        if prod.is_zero():
            continue
        src = cx.layout(n)
        dst = cx.layout(n + 2)
        for t in dst.cells:
            r0, r1 = dst.slot(t)
            for s in src.cells:
                c0, c1 = src.slot(s)
                if any(
                    prod.data[i][j] != z
                    for i in range(r0, r1)
                    for j in range(c0, c1)
                ):
                    witnesses.append((n, t, s))
    return SquareReport(witnesses)
