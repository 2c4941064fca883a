"""Regular CW complexes as graded posets with signed incidence numbers.

Incidence values live in {+1, -1}; a zero incidence is recorded by leaving
the covering pair out entirely.  Construction checks the codimension-two
identity: over each sigma < tau with dim tau = dim sigma + 2,

    sum over lambda with sigma < lambda < tau of [sigma:lambda][lambda:tau] = 0.
"""

from .errors import IncidenceIdentityViolation, NotASubcomplex, UnknownCell, ValidationError
from .poset import build_poset


class CWComplex:
    """A graded poset plus the incidence sign of every covering pair."""

    def __init__(self, poset, incidence):
        self.poset = poset
        self.incidence = incidence

    def __contains__(self, cell):
        return cell in self.poset

    def cells(self):
        return self.poset.elements()

    def dim(self, cell):
        return self.poset.dim(cell)

    def sign(self, sigma, tau):
        return self.incidence.get((sigma, tau), 0)


def incidence_violations(poset, incidence):
    """All (sigma, tau) pairs two dimensions apart whose sign sums are nonzero."""
    sums = {}
    for sigma in poset.dims:
        for lam in poset.x_plus(sigma):
            s1 = incidence[(sigma, lam)]
            for tau in poset.x_plus(lam):
                key = (sigma, tau)
                sums[key] = sums.get(key, 0) + s1 * incidence[(lam, tau)]
    return sorted(key for key, total in sums.items() if total != 0)


def subcomplex(cw, cells):
    """The full subcomplex on a face-closed cell subset.

    Cell ids carry over unchanged, so inclusions into the ambient complex
    are identity maps on ids.
    """
    keep = set(cells)
    for cell in sorted(keep):
        if cell not in cw.poset:
            raise UnknownCell("no cell %r in the complex" % (cell,))
        missing = [f for f in cw.poset.x_minus(cell) if f not in keep]
        if missing:
            raise NotASubcomplex(
                "cell %r kept but its face %r dropped" % (cell, missing[0])
            )
    elements = [(c, cw.poset.dim(c)) for c in sorted(keep)]
    incidence = {
        pair: sign
        for pair, sign in cw.incidence.items()
        if pair[0] in keep and pair[1] in keep
    }
    return CWComplex(build_poset(elements, incidence.keys()), incidence)


def build_cw(elements, signed_incidence):
    """Assemble a CWComplex from cells and {covering pair: sign}.

    Every listed pair becomes a cover of the underlying poset; the identity
    above is enforced and all violating pairs are reported at once.
    """
    incidence = {}
    for (sigma, tau), sign in signed_incidence.items():
        if sign not in (1, -1):
            raise ValidationError(
                "incidence [%s:%s] must be +1 or -1, got %r" % (sigma, tau, sign)
            )
        incidence[(sigma, tau)] = sign
    poset = build_poset(elements, incidence.keys())
    bad = incidence_violations(poset, incidence)
    if bad:
        raise IncidenceIdentityViolation(bad)
    return CWComplex(poset, incidence)
