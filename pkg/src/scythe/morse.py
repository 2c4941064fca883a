"""Acyclic matchings and the queue-driven reduction of parametrized complexes.

The engine repeatedly picks a critical seed cell, then breadth-first
searches its neighborhood for covering pairs (x, y) whose map is invertible
and removes them, correcting the surviving maps so cohomology is untouched.
A dual top-down sweep and an iterated mode are provided, together with a
gradient-path oracle used to cross-check the reduction.
"""

from collections import deque
import heapq

from .errors import CyclicMatching, NotACover, NotInvertible, ValidationError
from .matrix import mat_mul, try_invert
from . import equivalence as _equiv


class Matching:
    """Matched pairs in removal order plus the surviving critical set."""

    def __init__(self, pairs=None, critical=None):
        self.pairs = list(pairs) if pairs else []
        self.critical = set(critical) if critical else set()

    def __len__(self):
        return len(self.pairs)

    def matched_elements(self):
        out = set()
        for x, y in self.pairs:
            out.add(x)
            out.add(y)
        return out


class PassRecord:
    """One reduction sweep: the poset as it stood beforehand, and its matching."""

    def __init__(self, poset_before, matching):
        self.poset_before = poset_before
        self.matching = matching


class MorseData:
    """Result of a reduction: the mutated parametrization and its bookkeeping."""

    def __init__(self, matching, reduced, equivalence=None, passes=None):
        self.matching = matching
        self.reduced = reduced
        self.equivalence = equivalence
        self.passes = passes if passes is not None else []

    @property
    def critical_poset(self):
        return self.reduced.poset

    def critical_counts(self):
        """Cells surviving per dimension, the m_k of the complexity bound."""
        counts = {}
        for x, d in self.reduced.poset.dims.items():
            counts[d] = counts.get(d, 0) + 1
        top = max(counts, default=-1)
        return [counts.get(k, 0) for k in range(top + 1)]

    def m_tilde(self):
        return sum(m * m for m in self.critical_counts())


def reduce_pair(param, x, y):
    """Remove the covering pair (x, y), folding its map into the survivors.

    For every z above x and w below y, the map from w to z picks up the
    correction -F_xz . F_xy^{-1} . F_wy, creating the cover (w, z) when it
    was absent; covers whose maps cancel to zero are deleted outright.
    """
    poset = param.poset
    if not poset.has_cover(x, y):
        raise NotACover("(%s, %s) is not a covering pair" % (x, y))
    inv = try_invert(param.map_of(x, y))
    if inv is None:
        raise NotInvertible("map of (%s, %s) has no inverse" % (x, y))
    zs = sorted(poset.x_plus(x) - {y})
    ws = sorted(poset.x_minus(y) - {x})
    corrections = []
    for z in zs:
        fxz = param.maps.get((x, z))
        if fxz is None:
            continue
        corrections.append((z, mat_mul(fxz, inv)))
    for w in ws:
        fwy = param.maps.get((w, y))
        if fwy is None:
            continue
        for z, head in corrections:
            updated = param.map_of(w, z).sub(mat_mul(head, fwy))
            if updated.is_zero():
                if poset.has_cover(w, z):
                    poset.remove_cover(w, z)
                    param.maps.pop((w, z), None)
            else:
                if not poset.has_cover(w, z):
                    poset.add_cover(w, z)
                param.maps[(w, z)] = updated
    for dead in (x, y):
        for t in poset.x_plus(dead):
            param.maps.pop((dead, t), None)
        for s in poset.x_minus(dead):
            param.maps.pop((s, dead), None)
        poset.remove_element(dead)


def _pairing_candidate(param, critical, y, policy, upward):
    """The unique partner cell for y under the given policy, or None.

    upward=True reads the standard sweep (y above, partner below); the dual
    sweep passes upward=False and searches above y instead.
    """
    poset = param.poset
    neighbors = poset.x_minus(y) if upward else poset.x_plus(y)
    nc = [e for e in neighbors if e not in critical]
    if policy == "strict":
        if len(nc) != 1:
            return None
        partner = nc[0]
        pair = (partner, y) if upward else (y, partner)
        if try_invert(param.map_of(*pair)) is None:
            return None
        return partner
    if policy == "relaxed":
        hits = []
        for e in nc:
            pair = (e, y) if upward else (y, e)
            if try_invert(param.map_of(*pair)) is not None:
                hits.append(e)
        if len(hits) == 1:
            return hits[0]
        return None
    raise ValidationError("unknown pairing policy %r" % (policy,))


def _sweep(param, upward, policy, tracker, observer):
    """One full reduction sweep in the given direction; returns its Matching."""
    poset = param.poset
    critical = set()
    matching = Matching()
    if upward:
        heap = [(d, x) for x, d in poset.dims.items()]
    else:
        heap = [(-d, x) for x, d in poset.dims.items()]
    heapq.heapify(heap)
    while heap:
        _, c = heapq.heappop(heap)
        if c not in poset.dims or c in critical:
            continue
        critical.add(c)
        if observer is not None:
            observer.select(c)
        flags = {c}
        queue = deque([c])

        def enqueue(cells):
            for e in sorted(cells):
                if e in poset.dims and e not in critical and e not in flags:
                    flags.add(e)
                    queue.append(e)
                    if observer is not None:
                        observer.enqueue(e)

        while queue:
            y = queue.popleft()
            if y not in poset.dims:
                continue
            if observer is not None:
                observer.dequeue(y)
            partner = _pairing_candidate(param, critical, y, policy, upward)
            if partner is not None:
                x, top = (partner, y) if upward else (y, partner)
                enqueue(poset.x_plus(x) - {top} if upward
                        else poset.x_minus(top) - {x})
                comeback = sorted(poset.x_plus(y) if upward else poset.x_minus(y))
                if tracker is not None:
                    tracker.apply_step(_equiv.step_maps(param, x, top))
                if observer is not None:
                    observer.pair(x, top)
                reduce_pair(param, x, top)
                matching.pairs.append((x, top))
                enqueue(comeback)
            else:
                enqueue(poset.x_plus(y) if upward else poset.x_minus(y))
    matching.critical = set(poset.dims)
    return matching


def _run(param, upward, policy, track_equivalence, keep_steps, observer):
    snapshot = param.poset.copy()
    tracker = None
    if track_equivalence:
        tracker = _equiv.start_tracking(param, keep_steps=keep_steps)
    matching = _sweep(param, upward, policy, tracker, observer)
    eq = tracker.finalize(param) if tracker is not None else None
    return MorseData(matching, param, eq, [PassRecord(snapshot, matching)])


def scythe(param, policy="strict", track_equivalence=False, keep_steps=False,
           observer=None):
    """Reduce param in place, seeding from minimal cells upward.

    Seeds are chosen by least dimension then id.  The default policy pairs
    y with x only when x is the sole non-critical cell under y and the map
    F_xy is invertible; policy="relaxed" instead asks for a unique
    invertible partner among possibly many non-critical faces (the emitted
    matching then lives on the reduced order, and the monotone-removal
    guarantee of the strict reading is not asserted).
    """
    return _run(param, True, policy, track_equivalence, keep_steps, observer)


def coscythe(param, policy="strict", track_equivalence=False, keep_steps=False,
             observer=None):
    """Dual sweep: seeds maximal cells (greatest dimension, then id) and
    searches above each dequeued cell for its unique partner."""
    return _run(param, False, policy, track_equivalence, keep_steps, observer)


def iterate_scythe(param, policy="strict", track_equivalence=False,
                   keep_steps=False, observer=None):
    """Run reduction sweeps until the critical poset stops shrinking.

    Each sweep starts with every surviving cell non-critical again; the
    passes field records one PassRecord per sweep and the matching collects
    every removed pair in order.
    """
    tracker = None
    if track_equivalence:
        tracker = _equiv.start_tracking(param, keep_steps=keep_steps)
    passes = []
    all_pairs = []
    while True:
        before = len(param.poset)
        snapshot = param.poset.copy()
        matching = _sweep(param, True, policy, tracker, observer)
        passes.append(PassRecord(snapshot, matching))
        all_pairs.extend(matching.pairs)
        if len(param.poset) == before:
            break
    combined = Matching(all_pairs, set(param.poset.dims))
    eq = tracker.finalize(param) if tracker is not None else None
    return MorseData(combined, param, eq, passes)


class AcyclicReport:
    """Outcome of an acyclicity check; .order is a topological sort of the
    pairs when acyclic, .cycle a witness list of pairs when not."""

    def __init__(self, order=None, cycle=None):
        self.order = order
        self.cycle = cycle

    def __bool__(self):
        return self.cycle is None


def verify_acyclic(matching, poset):
    """Topologically sort the pair relation; report an order or a cycle.

    Pair (x, y) precedes (x', y') when x lies under y' in the poset; a
    matching is acyclic exactly when this relation has no directed cycle.
    """
    pairs = sorted(set(matching.pairs))
    index = {p: i for i, p in enumerate(pairs)}
    succ = [[] for _ in pairs]
    indeg = [0] * len(pairs)
    for i, (x, _) in enumerate(pairs):
        if x not in poset.dims:
            continue
        for y2 in poset.x_plus(x):
            for p2 in pairs:
                if p2[1] == y2 and index[p2] != i:
                    succ[i].append(index[p2])
                    indeg[index[p2]] += 1
    ready = sorted(i for i in range(len(pairs)) if indeg[i] == 0)
    heapq.heapify(ready)
    order = []
    while ready:
        i = heapq.heappop(ready)
        order.append(pairs[i])
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(ready, j)
    if len(order) == len(pairs):
        return AcyclicReport(order=order)
    leftover = {i for i in range(len(pairs)) if indeg[i] > 0}
    start = min(leftover)
    seen = {}
    walk = []
    i = start
    while i not in seen:
        seen[i] = len(walk)
        walk.append(i)
        i = next(j for j in succ[i] if j in leftover)
    cycle = [pairs[j] for j in walk[seen[i]:]]
    return AcyclicReport(cycle=cycle)


def verify_matching_axioms(matching, poset):
    """Check the dimension and partition axioms against the given poset."""
    seen = set()
    for x, y in matching.pairs:
        if not poset.has_cover(x, y):
            return False
        if x in seen or y in seen:
            return False
        seen.add(x)
        seen.add(y)
    return True


def verify_monotone_removal(matching, poset, top_down=False):
    """Check pairs were removed in an order compatible with the pair relation.

    poset must be the snapshot from before the sweep; returns True when no
    pair precedes one removed earlier.  The upward sweep removes relation
    predecessors first; the dual sweep removes successors first and is
    checked with top_down=True, which reads the pair list in reverse.
    """
    pairs = matching.pairs
    if top_down:
        pairs = list(reversed(pairs))
    for j in range(len(pairs)):
        yj = pairs[j][1]
        below = poset.x_minus(yj) if yj in poset.dims else set()
        for i in range(j + 1, len(pairs)):
            if pairs[i][0] in below:
                return False
    return True


def _validate_for_oracle(original, matching):
    if not verify_matching_axioms(matching, original.poset):
        raise ValidationError("matching violates the dimension/partition axioms")
    report = verify_acyclic(matching, original.poset)
    if not report:
        raise CyclicMatching(report.cycle)
    inverses = {}
    for x, y in matching.pairs:
        inv = try_invert(original.map_of(x, y))
        if inv is None:
            raise NotInvertible("matched map (%s, %s) has no inverse" % (x, y))
        inverses[(x, y)] = inv
    return inverses


def morse_coboundary_oracle(original, matching):
    """Blocks of the reduced coboundary via explicit gradient-path sums.

    For critical cells m, m' one dimension apart, sums the direct map F_mm'
    with one term per gradient path: the chain of matched-pair inverses
    (each negated) interleaved with the covering maps along the path.
    Exponential in the worst case; intended for cross-validation on small
    inputs.  Returns only the nonzero blocks, keyed by (m, m').
    """
    inverses = _validate_for_oracle(original, matching)
    poset = original.poset
    field = original.field
    matched = matching.matched_elements()
    critical = sorted(x for x in poset.dims if x not in matched)
    upper_pair = {y: (x, y) for x, y in matching.pairs}
    blocks = {}

    def accumulate(m, mp, contribution):
        key = (m, mp)
        if key in blocks:
            blocks[key] = blocks[key].add(contribution)
        else:
            blocks[key] = contribution

    for m in critical:
        for mp in sorted(poset.x_plus(m)):
            if mp not in matched:
                accumulate(m, mp, original.map_of(m, mp))
        for y1 in sorted(poset.x_plus(m)):
            if y1 not in upper_pair:
                continue
            first = upper_pair[y1]
            fm = original.map_of(m, y1)
            stack = [(first, mat_mul(inverses[first].neg(), fm), {first})]
            while stack:
                (x, y), acc, on_path = stack.pop()
                for mp in sorted(poset.x_plus(x)):
                    if mp in matched:
                        if mp in upper_pair:
                            nxt = upper_pair[mp]
                            if nxt == (x, y):
                                continue
                            if nxt in on_path:
                                raise CyclicMatching(sorted(on_path))
                            step = mat_mul(
                                inverses[nxt].neg(),
                                mat_mul(original.map_of(x, mp), acc),
                            )
                            stack.append((nxt, step, on_path | {nxt}))
                    else:
                        accumulate(m, mp, mat_mul(original.map_of(x, mp), acc))
    return {
        key: blk for key, blk in sorted(blocks.items()) if not blk.is_zero()
    }
