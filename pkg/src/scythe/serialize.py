"""JSON interchange for complexes, sheaves, parametrizations, covers, fibers.

One document shape throughout: {"kind": ..., "cells"/"covers"/... }.  The
kind field wins when present; without it, rank or map data means a sheaf.
Matrices are nested arrays of element strings.  Output is canonical (sorted
keys, two-space indent, trailing newline) so equal objects give equal bytes.
Parse errors carry a JSON-ish path to the offending spot.
"""

import json

from .cohomology import CohomologyProfile
from .cw import CWComplex, build_cw
from .errors import ParseError
from .field import RATIONAL, FieldSpec
from .matrix import Matrix
from .nerve import Cover
from .sheaf import CellularSheaf, compile_sheaf


def dumps(obj):
    """Canonical text form of a JSON-ready object."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("not JSON: %s" % exc)


def complex_to_json(cw):
    cells = [{"id": c, "dim": cw.poset.dim(c)} for c in cw.cells()]
    covers = [
        {"from": s, "to": t, "incidence": cw.incidence[(s, t)]}
        for s, t in cw.poset.covers()
    ]
    return {"kind": "complex", "cells": cells, "covers": covers}


def sheaf_to_json(sheaf):
    cells = [
        {"id": c, "dim": sheaf.base.poset.dim(c), "rank": sheaf.stalk_rank[c]}
        for c in sheaf.base.cells()
    ]
    covers = []
    for s, t in sheaf.base.poset.covers():
        entry = {"from": s, "to": t, "incidence": sheaf.base.incidence[(s, t)]}
        m = sheaf.restriction.get((s, t))
        if m is not None:
            entry["map"] = m.to_json()
        covers.append(entry)
    return {
        "kind": "sheaf",
        "field": sheaf.field.to_json(),
        "cells": cells,
        "covers": covers,
    }


def param_to_json(param):
    """Parametrizations write incidence 1 and the signed map on every cover.

    Zero maps and their covers are omitted; absence is the zero map.
    """
    cells = [
        {"id": c, "dim": param.poset.dim(c), "rank": param.stalk_rank[c]}
        for c in param.poset.elements()
    ]
    covers = []
    for s, t in param.poset.covers():
        m = param.maps.get((s, t))
        if m is None or m.is_zero():
            continue
        covers.append({"from": s, "to": t, "incidence": 1, "map": m.to_json()})
    return {
        "kind": "parametrization",
        "field": param.field.to_json(),
        "cells": cells,
        "covers": covers,
    }


def equivalence_to_json(eq):
    """Dense psi/phi/theta matrices by dimension, with their cell orders."""
    top = max(eq.src_layouts) if eq.src_layouts else 0
    out = {
        "psi": {str(n): eq.psi_matrix(n).to_json() for n in range(top + 1)},
        "phi": {str(n): eq.phi_matrix(n).to_json() for n in range(top + 1)},
        "theta": {str(n): eq.theta_matrix(n).to_json()
                  for n in range(1, top + 1)},
        "source_cells": {
            str(n): list(eq.src_layouts[n].cells)
            for n in sorted(eq.src_layouts)
        },
        "target_cells": {str(n): eq.dst_cells(n) for n in range(top + 1)},
    }
    return out


def reduced_to_json(morse_data, equivalence=None):
    out = param_to_json(morse_data.reduced)
    out["kind"] = "reduced"
    out["matching"] = [
        {"lower": x, "upper": y} for x, y in morse_data.matching.pairs
    ]
    if equivalence is not None:
        out["equivalence"] = equivalence_to_json(equivalence)
    return out


def cover_to_json(cover):
    return {
        "kind": "cover",
        "pieces": [
            {"name": name, "cells": sorted(cells)}
            for name, cells in cover.pieces.items()
        ],
    }


def fibers_to_json(gamma, fibers):
    return {
        "kind": "fibers",
        "graph": complex_to_json(gamma),
        "fibers": {cell: sorted(cells) for cell, cells in sorted(fibers.items())},
    }


def _expect(cond, msg):
    if not cond:
        raise ParseError(msg)


def _get(data, key, path):
    if key not in data:
        raise ParseError("%s: missing %r" % (path, key))
    return data[key]


def _int(value, path, minimum=None):
    _expect(isinstance(value, int) and not isinstance(value, bool),
            "%s: expected an integer, got %r" % (path, value))
    if minimum is not None:
        _expect(value >= minimum, "%s: expected >= %d, got %d" % (path, minimum, value))
    return value


def parse_field(obj):
    if obj is None:
        return RATIONAL
    _expect(isinstance(obj, dict), "field: expected an object")
    return FieldSpec.from_json(obj)


def _parse_matrix(field, grid, rows, cols, path):
    _expect(isinstance(grid, list), "%s: expected an array of rows" % path)
    if len(grid) != rows:
        raise ParseError("%s: expected %d rows, got %d" % (path, rows, len(grid)))
    data = []
    for r, row in enumerate(grid):
        _expect(isinstance(row, list) and len(row) == cols,
                "%s[%d]: expected %d entries" % (path, r, cols))
        parsed = []
        for c, value in enumerate(row):
            _expect(isinstance(value, (str, int)) and not isinstance(value, bool),
                    "%s[%d][%d]: expected an element string" % (path, r, c))
            try:
                parsed.append(field.parse(value))
            except ParseError as exc:
                raise ParseError("%s[%d][%d]: %s" % (path, r, c, exc))
        data.append(parsed)
    return Matrix(field, rows, cols, data)


def _parse_cells(data, path):
    raw = _get(data, "cells", path)
    _expect(isinstance(raw, list), "%s.cells: expected an array" % path)
    elements = []
    ranks = {}
    for i, entry in enumerate(raw):
        p = "%s.cells[%d]" % (path, i)
        _expect(isinstance(entry, dict), p + ": expected an object")
        cid = _get(entry, "id", p)
        _expect(isinstance(cid, str) and cid, p + ".id: expected a nonempty string")
        dim = _int(_get(entry, "dim", p), p + ".dim", minimum=0)
        elements.append((cid, dim))
        if "rank" in entry:
            ranks[cid] = _int(entry["rank"], p + ".rank", minimum=0)
    if ranks and len(ranks) != len(elements):
        raise ParseError(
            "%s.cells: some cells carry ranks and some do not" % path
        )
    return elements, (ranks or None)


def _parse_covers(data, field, ranks, path):
    raw = data.get("covers", [])
    _expect(isinstance(raw, list), "%s.covers: expected an array" % path)
    incidence = {}
    maps = {}
    rank_of = (ranks or {}).get
    for i, entry in enumerate(raw):
        p = "%s.covers[%d]" % (path, i)
        _expect(isinstance(entry, dict), p + ": expected an object")
        s = _get(entry, "from", p)
        t = _get(entry, "to", p)
        _expect(isinstance(s, str) and isinstance(t, str),
                p + ": from/to must be cell ids")
        sign = _int(_get(entry, "incidence", p), p + ".incidence")
        _expect(sign in (1, -1), p + ".incidence: expected +1 or -1")
        if (s, t) in incidence:
            raise ParseError("%s: duplicate cover (%s, %s)" % (p, s, t))
        incidence[(s, t)] = sign
        if "map" in entry:
            if ranks is None:
                raise ParseError(p + ".map: maps need cell ranks")
            if rank_of(s) is None or rank_of(t) is None:
                raise ParseError(p + ": cover endpoints missing from cells")
            maps[(s, t)] = _parse_matrix(
                field, entry["map"], rank_of(t), rank_of(s), p + ".map"
            )
    return incidence, maps


def _parse_complex_family(data, kind, path="$"):
    field = parse_field(data.get("field"))
    elements, ranks = _parse_cells(data, path)
    incidence, maps = _parse_covers(data, field, ranks, path)
    if kind is None:
        kind = "sheaf" if ranks is not None or maps else "complex"
    if kind == "complex":
        if ranks is not None or maps:
            raise ParseError(
                "%s: complex documents carry no ranks or maps" % path
            )
        return build_cw(elements, incidence)
    if ranks is None:
        raise ParseError("%s: sheaf documents need a rank on every cell" % path)
    base = build_cw(elements, incidence)
    sheaf = CellularSheaf(base, field, ranks, maps)
    if kind == "sheaf":
        compile_sheaf(sheaf)
        return sheaf
    if kind in ("parametrization", "reduced"):
        for pair, sign in incidence.items():
            if sign != 1:
                raise ParseError(
                    "%s: parametrization covers must have incidence 1, "
                    "got %d on (%s, %s)" % (path, sign, pair[0], pair[1])
                )
        return compile_sheaf(sheaf)
    raise ParseError("%s: unknown kind %r" % (path, kind))


def parse(data):
    """Build the object a JSON document describes.

    Complex documents come back as CWComplex, sheaf documents as
    CellularSheaf, parametrization/reduced documents as Parametrization
    (validated and with d-squared checked), fiber documents as a
    (graph, fibers) pair.  Cover documents need a base complex; use
    parse_cover.
    """
    _expect(isinstance(data, dict), "top level: expected an object")
    kind = data.get("kind")
    if kind is None:
        if "pieces" in data:
            kind = "cover"
        elif "fibers" in data:
            kind = "fibers"
    if kind == "cover":
        raise ParseError("cover documents parse against a base complex")
    if kind == "fibers":
        return parse_fibers(data)
    if kind == "profile":
        return parse_profile(data)
    if kind in (None, "complex", "sheaf", "parametrization", "reduced"):
        return _parse_complex_family(data, kind)
    raise ParseError("unknown kind %r" % (kind,))


def parse_cover(data, base):
    _expect(isinstance(data, dict), "top level: expected an object")
    if data.get("kind") not in (None, "cover"):
        raise ParseError("expected a cover document, got %r" % (data.get("kind"),))
    raw = _get(data, "pieces", "$")
    _expect(isinstance(raw, list), "pieces: expected an array")
    pieces = []
    for i, entry in enumerate(raw):
        p = "pieces[%d]" % i
        _expect(isinstance(entry, dict), p + ": expected an object")
        name = _get(entry, "name", p)
        _expect(isinstance(name, str), p + ".name: expected a string")
        cells = _get(entry, "cells", p)
        _expect(isinstance(cells, list) and all(isinstance(c, str) for c in cells),
                p + ".cells: expected an array of cell ids")
        pieces.append((name, cells))
    return Cover(base, pieces)


def parse_fibers(data):
    _expect(isinstance(data, dict), "top level: expected an object")
    graph = parse(_get(data, "graph", "$"))
    _expect(isinstance(graph, CWComplex), "graph: expected a bare complex")
    raw = _get(data, "fibers", "$")
    _expect(isinstance(raw, dict), "fibers: expected an object")
    fibers = {}
    for cell, cells in raw.items():
        _expect(isinstance(cells, list) and all(isinstance(c, str) for c in cells),
                "fibers[%r]: expected an array of cell ids" % cell)
        fibers[cell] = frozenset(cells)
    return graph, fibers


def parse_profile(data):
    raw = _get(data, "betti", "$")
    _expect(isinstance(raw, list), "betti: expected an array")
    return CohomologyProfile([_int(v, "betti[%d]" % i, minimum=0)
                              for i, v in enumerate(raw)])
