"""Cohomology of assembled complexes: Betti numbers, cocycle bases, and the
maps induced on cohomology by inclusions of complexes.

Each complex caches one echelon factorization per dimension; every rank,
kernel and modulo-coboundary solve reuses it.
"""

from .errors import NotAComplex, SolveFailed, UnknownCell
from .matrix import EchelonSolver, Matrix, matvec
from .morse import scythe
from .parametrization import verify_d_squared
from .sheaf import compile_sheaf


class CohomologyProfile:
    """Betti numbers by dimension, optionally with generator matrices."""

    def __init__(self, betti, generators=None):
        self.betti = list(betti)
        self.generators = generators

    def __eq__(self, other):
        return isinstance(other, CohomologyProfile) and self.betti == other.betti

    def __repr__(self):
        return "CohomologyProfile(%r)" % (self.betti,)

    def to_json(self):
        out = {"betti": self.betti}
        if self.generators is not None:
            out["generators"] = {
                str(n): m.to_json() for n, m in sorted(self.generators.items())
            }
        return out


def sheaf_cohomology(sheaf, reduce_first=True, generators=False):
    """Betti profile of a cellular sheaf, via a reduction sweep by default.

    The profile spans degrees 0 through the base complex dimension even
    when the reduction empties the top degrees.
    """
    param = compile_sheaf(sheaf)
    top = param.max_dim()
    if reduce_first:
        scythe(param)
    profile = betti(param.assemble(), generators=generators)
    while len(profile.betti) < top + 1:
        profile.betti.append(0)
    return profile


def _ensure_complex(cx):
    report = cx._cache.get("d2")
    if report is None:
        report = verify_d_squared(cx)
        cx._cache["d2"] = report
    if not report:
        n, tgt, src = report.witnesses[0]
        raise NotAComplex(n, report.witnesses)


def _solver(cx, n):
    key = ("echelon", n)
    if key not in cx._cache:
        cx._cache[key] = EchelonSolver(cx.d(n))
    return cx._cache[key]


def betti(cx, generators=False):
    """Betti numbers of every dimension of the complex.

    With generators=True the profile also carries, per dimension, the
    flagged cocycle representatives as matrix columns.
    """
    _ensure_complex(cx)
    numbers = []
    gens = {} if generators else None
    for n in range(cx.top + 1):
        kernel_dim = cx.rank_c(n) - _solver(cx, n).rank
        image_dim = _solver(cx, n - 1).rank if n > 0 else 0
        numbers.append(kernel_dim - image_dim)
        if generators:
            basis = cocycle_basis(cx, n)
            cols = [basis.matrix.column(j) for j in basis.flagged]
            data = [[col[i] for col in cols] for i in range(cx.rank_c(n))]
            gens[n] = Matrix(cx.field, cx.rank_c(n), len(cols), data)
    return CohomologyProfile(numbers, gens)


class CocycleBasis:
    """Kernel representatives at one dimension.

    matrix columns span the cocycles; flagged lists the column indices that
    stay independent after quotienting by coboundaries.
    """

    def __init__(self, matrix, flagged):
        self.matrix = matrix
        self.flagged = flagged


def cocycle_basis(cx, n):
    _ensure_complex(cx)
    key = ("basis", n)
    if key in cx._cache:
        return cx._cache[key]
    if n < 0 or n > cx.top:
        out = CocycleBasis(Matrix.zeros(cx.field, max(cx.rank_c(n), 0), 0), [])
        cx._cache[key] = out
        return out
    kernel = _solver(cx, n).kernel_basis()
    bound = cx.d(n - 1)
    total = cx.rank_c(n)
    data = [bound.data[i] + kernel.data[i] for i in range(total)]
    pivots = EchelonSolver(Matrix(cx.field, total, bound.cols + kernel.cols, data)).pivots
    flagged = [j - bound.cols for j in pivots if j >= bound.cols]
    out = CocycleBasis(kernel, flagged)
    cx._cache[key] = out
    return out


def _class_solver(cx, n):
    """Echelon of [coboundaries | flagged representatives], cached."""
    key = ("classes", n)
    if key not in cx._cache:
        basis = cocycle_basis(cx, n)
        bound = cx.d(n - 1)
        total = cx.rank_c(n)
        reps = [basis.matrix.column(j) for j in basis.flagged]
        data = [
            bound.data[i] + [col[i] for col in reps] for i in range(total)
        ]
        solver = EchelonSolver(Matrix(cx.field, total, bound.cols + len(reps), data))
        cx._cache[key] = (solver, bound.cols, len(reps))
    return cx._cache[key]


def class_coordinates(cx, vec, n):
    """Coordinates of a cocycle's class in the flagged basis at dimension n."""
    image = matvec(cx.d(n), vec)
    if any(v != cx.field.zero for v in image):
        raise SolveFailed("vector at dimension %d is not a cocycle" % n)
    solver, n_bound, n_reps = _class_solver(cx, n)
    sol = solver.solve(vec)
    if sol is None:
        raise SolveFailed("cocycle not spanned by coboundaries and representatives")
    return sol[n_bound:n_bound + n_reps]


def induced_map(big, small, embedding, n):
    """Matrix of H^n(big) -> H^n(small) for an inclusion of complexes.

    embedding maps each cell of small to the corresponding cell of big;
    None means the ids coincide.  Restriction copies each small cell's block
    out of the big representative, then the class is solved for in small's
    flagged basis.
    """
    _ensure_complex(big)
    _ensure_complex(small)
    src = big.layout(n)
    dst = small.layout(n)
    spots = []
    for c in dst.cells:
        b = embedding[c] if embedding is not None else c
        if b not in src.offsets:
            raise UnknownCell("embedding target %r missing at dimension %d" % (b, n))
        if src.ranks[b] != dst.ranks[c]:
            raise SolveFailed(
                "stalk ranks differ across the embedding at %r" % (c,)
            )
        spots.append((dst.offsets[c], src.offsets[b], dst.ranks[c]))
    big_basis = cocycle_basis(big, n)
    cols = []
    for j in big_basis.flagged:
        rep = big_basis.matrix.column(j)
        restricted = [small.field.zero] * dst.total
        for doff, soff, r in spots:
            restricted[doff:doff + r] = rep[soff:soff + r]
        cols.append(class_coordinates(small, restricted, n))
    small_flags = len(cocycle_basis(small, n).flagged)
    data = [[col[i] for col in cols] for i in range(small_flags)]
    return Matrix(small.field, small_flags, len(cols), data)
