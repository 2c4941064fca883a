"""Covers, nerves, and sheaf cohomology pipelines over one-dimensional bases.

The decomposition theorems here compute H^n of a space from H^0 and H^1 of
sheaves living on a nerve or Reeb graph.  They are valid only when that base
is at most one-dimensional, so higher nerves are refused, not approximated.
Stalk computations are independent and run on a bounded worker pool.
"""

from concurrent.futures import ThreadPoolExecutor

from .cohomology import CohomologyProfile, betti, induced_map, sheaf_cohomology
from .cw import build_cw, subcomplex
from .errors import (
    FiberInclusionViolated,
    NerveTooBig,
    NotACover,
    ScytheError,
    ValidationError,
)
from .field import RATIONAL
from .sheaf import CellularSheaf, compile_sheaf, constant_sheaf


class Cover:
    """A finite cover of a CW complex by face-closed pieces.

    Pieces are named; names become nerve vertex ids and are joined with "|"
    for higher simplices, so the bar is reserved.
    """

    def __init__(self, base, pieces):
        seen = {}
        for name, cells in pieces:
            if not name or "|" in name:
                raise NotACover("bad piece name %r" % (name,))
            if name in seen:
                raise NotACover("duplicate piece name %r" % (name,))
            cells = frozenset(cells)
            if not cells:
                raise NotACover("piece %r is empty" % (name,))
            seen[name] = cells
        if not seen:
            raise NotACover("a cover needs at least one piece")
        for name in sorted(seen):
            cells = seen[name]
            for c in sorted(cells):
                if c not in base.poset:
                    raise NotACover("piece %r lists unknown cell %r" % (name, c))
                for f in base.poset.x_minus(c):
                    if f not in cells:
                        raise NotACover(
                            "piece %r is not face-closed: %r misses face %r"
                            % (name, c, f)
                        )
        missed = set(base.poset.dims) - frozenset().union(*seen.values())
        if missed:
            raise NotACover("cells not covered: %s" % (sorted(missed),))
        self.base = base
        self.pieces = {name: seen[name] for name in sorted(seen)}

    def names(self):
        return list(self.pieces)

    def piece(self, name):
        return self.pieces[name]


class Nerve:
    """The nerve as a simplicial CWComplex plus the support of each simplex."""

    def __init__(self, cw, supports, simplices):
        self.cw = cw
        self.supports = supports
        self.simplices = simplices

    @property
    def dim(self):
        return self.cw.poset.max_dim()


def nerve(cover):
    """All piece collections with nonempty intersection, as a complex.

    Simplex ids join the sorted piece names with "|"; incidence signs are
    the alternating ones of the induced vertex order.
    """
    level = {(name,): cover.pieces[name] for name in cover.names()}
    found = dict(level)
    while level:
        grown = {}
        for tup, supp in level.items():
            for name in cover.names():
                if name <= tup[-1]:
                    continue
                shared = supp & cover.pieces[name]
                if shared:
                    grown[tup + (name,)] = shared
        found.update(grown)
        level = grown
    elements = [("|".join(tup), len(tup) - 1) for tup in found]
    incidence = {}
    for tup in found:
        if len(tup) == 1:
            continue
        for i in range(len(tup)):
            face = tup[:i] + tup[i + 1:]
            incidence[("|".join(face), "|".join(tup))] = (-1) ** i
    cw = build_cw(elements, incidence)
    supports = {"|".join(tup): frozenset(supp) for tup, supp in found.items()}
    simplices = {"|".join(tup): tup for tup in found}
    return Nerve(cw, supports, simplices)


def _run_tasks(jobs, workers):
    """Run all zero-argument jobs, collecting (index, error) without stopping."""
    results = [None] * len(jobs)
    failures = []
    if workers <= 1:
        for i, job in enumerate(jobs):
            try:
                results[i] = job()
            except ScytheError as exc:
                failures.append((i, exc))
        return results, failures
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(job) for job in jobs]
        for i, fut in enumerate(futures):
            try:
                results[i] = fut.result()
            except ScytheError as exc:
                failures.append((i, exc))
    return results, failures


def _subset_complex(base, cells, field):
    piece = subcomplex(base, cells)
    return compile_sheaf(constant_sheaf(piece, 1, field)).assemble()


def parallel_stalks(base, tasks, field=RATIONAL, workers=1):
    """Cohomology profiles of face-closed subsets, one per (cells, degree) task.

    Results come back in task order whatever the worker count.  Every task
    is attempted; if any fail, the lowest-index failure is raised once the
    rest have finished.  Profiles are padded with zeros up to the requested
    degree so profile.betti[degree] always exists.
    """

    def job(cells, degree):
        def run():
            profile = betti(_subset_complex(base, cells, field))
            while len(profile.betti) <= degree:
                profile.betti.append(0)
            return profile

        return run

    results, failures = _run_tasks([job(c, d) for c, d in tasks], workers)
    if failures:
        raise failures[0][1]
    return results


def _stalk_tables(base, supports, field, workers):
    """Assembled complex and betti profile for every support, in parallel."""
    names = sorted(supports)

    def job(cells):
        def run():
            cx = _subset_complex(base, cells, field)
            return cx, betti(cx)

        return run

    results, failures = _run_tasks([job(supports[n]) for n in names], workers)
    if failures:
        raise failures[0][1]
    complexes = {name: out[0] for name, out in zip(names, results)}
    profiles = {name: out[1] for name, out in zip(names, results)}
    return complexes, profiles


def _entry(profile, n):
    return profile.betti[n] if 0 <= n < len(profile.betti) else 0


def _degree_sheaf(cw, complexes, profiles, n, field):
    """The sheaf on cw whose stalks are degree-n cohomologies of supports."""
    ranks = {cell: _entry(profiles[cell], n) for cell in cw.poset.dims}
    restriction = {}
    for sigma, tau in cw.poset.covers():
        if ranks[sigma] == 0 and ranks[tau] == 0:
            continue
        restriction[(sigma, tau)] = induced_map(
            complexes[sigma], complexes[tau], None, n
        )
    return CellularSheaf(cw, field, ranks, restriction)


class SheafOverNerve:
    """A degree tag, a cellular sheaf on the nerve, and the supports used."""

    def __init__(self, degree, sheaf, supports):
        self.degree = degree
        self.sheaf = sheaf
        self.supports = supports

    @property
    def base(self):
        return self.sheaf.base


def cech_sheaf(cover, n, field=RATIONAL, workers=1):
    """Degree-n cohomology of supports arranged as a sheaf on the nerve."""
    nv = nerve(cover)
    complexes, profiles = _stalk_tables(cover.base, nv.supports, field, workers)
    sheaf = _degree_sheaf(nv.cw, complexes, profiles, n, field)
    return SheafOverNerve(n, sheaf, dict(nv.supports))


def _combine(degree_pairs, top):
    """Fold (b0, b1) per degree into the decomposition profile."""
    out = []
    for n in range(top + 1):
        b0 = degree_pairs[n][0]
        b1 = degree_pairs[n - 1][1] if n > 0 else 0
        out.append(b0 + b1)
    return CohomologyProfile(out)


def _sheaf_b01(sheaf, reduce_first):
    if all(r == 0 for r in sheaf.stalk_rank.values()):
        return 0, 0
    profile = sheaf_cohomology(sheaf, reduce_first=reduce_first)
    return _entry(profile, 0), _entry(profile, 1)


def cohomology_via_cech(X, cover, field=RATIONAL, workers=1, reduce_first=True):
    """Betti numbers of X out of H^0/H^1 of its Čech sheaves on the nerve.

    Requires the nerve to be at most one-dimensional.  Nerve-level sheaf
    cohomology runs through a reduction sweep unless reduce_first is off.
    """
    base = cover.base
    if X is not None and set(X.poset.dims) != set(base.poset.dims):
        raise NotACover("cover does not cover the given complex")
    nv = nerve(cover)
    if nv.dim > 1:
        raise NerveTooBig(
            "nerve has a %d-simplex; the decomposition needs dimension <= 1"
            % nv.dim
        )
    complexes, profiles = _stalk_tables(base, nv.supports, field, workers)
    top = base.poset.max_dim()
    pairs = {
        n: _sheaf_b01(_degree_sheaf(nv.cw, complexes, profiles, n, field),
                      reduce_first)
        for n in range(top + 1)
    }
    return _combine(pairs, top)


def validate_fibers(X, gamma, fibers):
    """Check a fiber assignment and return it with frozen cell sets.

    Every cell of gamma needs a fiber, no extras, and each edge fiber must
    be contained in both endpoint fibers.
    """
    if gamma.poset.max_dim() > 1:
        raise NerveTooBig(
            "graph has dimension %d; the decomposition needs dimension <= 1"
            % gamma.poset.max_dim()
        )
    checked = {}
    for cell in gamma.cells():
        if cell not in fibers:
            raise ValidationError("no fiber assigned to graph cell %r" % (cell,))
        checked[cell] = frozenset(fibers[cell])
    for cell in fibers:
        if cell not in gamma.poset:
            raise ValidationError("fiber assigned to unknown graph cell %r" % (cell,))
    for edge in gamma.poset.elements_of_dim(1):
        for end in sorted(gamma.poset.x_minus(edge)):
            stray = sorted(checked[edge] - checked[end])
            if stray:
                raise FiberInclusionViolated(
                    "fiber of edge %r reaches outside the fiber of endpoint %r:"
                    " cell %r" % (edge, end, stray[0])
                )
    return checked


def leray_sheaf(X, gamma, fibers, n, field=RATIONAL, workers=1):
    """Degree-n cohomology of the fibers as a sheaf on the graph gamma.

    fibers maps every cell of gamma to a face-closed subset of X; each edge
    fiber must sit inside both endpoint fibers, mirroring how preimages of
    open stars shrink as cells grow.
    """
    checked = validate_fibers(X, gamma, fibers)
    complexes, profiles = _stalk_tables(X, checked, field, workers)
    sheaf = _degree_sheaf(gamma, complexes, profiles, n, field)
    return SheafOverNerve(n, sheaf, checked)


def cohomology_via_leray(X, gamma, fibers, field=RATIONAL, workers=1,
                         reduce_first=True):
    """Betti numbers of X from sheaves of fiber cohomology on a graph."""
    checked = validate_fibers(X, gamma, fibers)
    complexes, profiles = _stalk_tables(X, checked, field, workers)
    top = X.poset.max_dim()
    pairs = {
        n: _sheaf_b01(_degree_sheaf(gamma, complexes, profiles, n, field),
                      reduce_first)
        for n in range(top + 1)
    }
    return _combine(pairs, top)


class NerveReport:
    """Outcome of the acyclicity hypothesis check for a cover.

    failures lists (simplex id, betti profile) for every non-acyclic
    support; betti_match is None when the check was skipped for that reason.
    """

    def __init__(self, all_acyclic, failures, nerve_betti, base_betti,
                 betti_match):
        self.all_acyclic = all_acyclic
        self.failures = failures
        self.nerve_betti = nerve_betti
        self.base_betti = base_betti
        self.betti_match = betti_match

    def __bool__(self):
        return self.all_acyclic and bool(self.betti_match)

    def __repr__(self):
        return ("NerveReport(all_acyclic=%r, failures=%r, betti_match=%r)"
                % (self.all_acyclic, self.failures, self.betti_match))


def _trimmed(profile):
    out = list(profile.betti)
    while out and out[-1] == 0:
        out.pop()
    return out


def _acyclic(profile):
    return _trimmed(profile) == [1]


def nerve_theorem_check(cover, field=RATIONAL, workers=1):
    """Check every support is acyclic; if so compare nerve and base Betti."""
    nv = nerve(cover)
    names = sorted(nv.supports)
    results = parallel_stalks(
        cover.base, [(nv.supports[name], 0) for name in names],
        field=field, workers=workers,
    )
    failures = [
        (name, profile) for name, profile in zip(names, results)
        if not _acyclic(profile)
    ]
    nerve_betti = betti(compile_sheaf(constant_sheaf(nv.cw, 1, field)).assemble())
    base_betti = betti(
        compile_sheaf(constant_sheaf(cover.base, 1, field)).assemble()
    )
    match = None
    if not failures:
        match = _trimmed(nerve_betti) == _trimmed(base_betti)
    return NerveReport(not failures, failures, nerve_betti, base_betti, match)


class ComplexityEstimate:
    """Pipeline versus direct cost in the units of the cubic bounds."""

    def __init__(self, n_cells, graph_cells, max_fiber, dim):
        self.n_cells = n_cells
        self.graph_cells = graph_cells
        self.max_fiber = max_fiber
        self.dim = dim
        self.pipeline_cost = max_fiber ** 3 + graph_cells ** 3 * dim ** 3
        self.direct_cost = n_cells ** 3
        self.ratio = self.pipeline_cost / self.direct_cost

    def to_json(self):
        return {
            "n_cells": self.n_cells,
            "graph_cells": self.graph_cells,
            "max_fiber": self.max_fiber,
            "dim": self.dim,
            "pipeline_cost": self.pipeline_cost,
            "direct_cost": self.direct_cost,
            "ratio": self.ratio,
        }


def complexity_estimate(X, gamma, fibers):
    """Cell counts and the K^3 + g^3 d^3 versus N^3 comparison."""
    checked = validate_fibers(X, gamma, fibers)
    return ComplexityEstimate(
        n_cells=len(X.poset),
        graph_cells=len(gamma.poset),
        max_fiber=max(len(cells) for cells in checked.values()),
        dim=X.poset.max_dim(),
    )
