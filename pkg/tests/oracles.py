"""Independent reference computations the tests check the library against.

Everything here is written from scratch on purpose: plain Gaussian
elimination over Fraction or ints mod p, and Betti numbers straight from
the rank-nullity count.  No imports from scythe's linear algebra.
"""

from fractions import Fraction


def ref_rank(grid, p=None):
    """Rank by row reduction; grid is a list of rows of ints/Fractions."""
    if not grid or not grid[0]:
        return 0
    rows = [list(r) for r in grid]
    if p is None:
        rows = [[Fraction(v) for v in r] for r in rows]
    else:
        rows = [[int(v) % p for v in r] for r in rows]
    nrows, ncols = len(rows), len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, nrows):
            if rows[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = (Fraction(1) / rows[rank][col] if p is None
               else pow(rows[rank][col], -1, p))
        rows[rank] = [v * inv if p is None else (v * inv) % p
                      for v in rows[rank]]
        for r in range(nrows):
            if r == rank or rows[r][col] == 0:
                continue
            c = rows[r][col]
            if p is None:
                rows[r] = [a - c * b for a, b in zip(rows[r], rows[rank])]
            else:
                rows[r] = [(a - c * b) % p for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def betti_from_deltas(deltas, dims, p=None):
    """Betti numbers from coboundary grids; dims[n] is the rank of C^n.

    deltas[n] maps C^n to C^{n+1} as a list-of-rows grid (possibly []).
    """
    top = len(dims) - 1
    out = []
    for n in range(top + 1):
        r_n = ref_rank(deltas[n], p) if n < top else 0
        r_prev = ref_rank(deltas[n - 1], p) if n > 0 else 0
        out.append(dims[n] - r_n - r_prev)
    return out


def complex_to_grids(cx):
    """Pull the library's assembled coboundaries out into plain grids."""
    dims = [cx.rank_c(n) for n in range(cx.top + 1)]
    deltas = []
    for n in range(cx.top + 1):
        if n == cx.top:
            deltas.append([])
            continue
        m = cx.d(n)
        deltas.append([[m.data[i][j] for j in range(m.cols)]
                       for i in range(m.rows)])
    return deltas, dims


def ref_betti(cx, p=None):
    """Betti numbers of an assembled complex, via the reference elimination."""
    deltas, dims = complex_to_grids(cx)
    return betti_from_deltas(deltas, dims, p)
