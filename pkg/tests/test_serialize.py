import json

import pytest

from scythe.cohomology import betti, sheaf_cohomology
from scythe.complexes import (
    circle,
    genus2_reeb,
    three_arc_cover_cells,
    torus_grid,
    torus_reeb,
    two_arc_cover_cells,
)
from scythe.cw import CWComplex
from scythe.errors import ParseError
from scythe.field import RATIONAL, fp
from scythe.morse import scythe
from scythe.nerve import Cover
from scythe.serialize import (
    complex_to_json,
    cover_to_json,
    dumps,
    equivalence_to_json,
    fibers_to_json,
    loads,
    param_to_json,
    parse,
    parse_cover,
    parse_profile,
    reduced_to_json,
    sheaf_to_json,
)
from scythe.sheaf import (
    CellularSheaf,
    compile_sheaf,
    constant_sheaf,
    pushforward_constant,
)


def test_dumps_is_canonical():
    text = dumps({"b": 1, "a": [2]})
    assert text == '{\n  "a": [\n    2\n  ],\n  "b": 1\n}\n'
    assert dumps(json.loads(text)) == text
    with pytest.raises(ParseError):
        loads("{nope")


def test_complex_round_trip():
    cw = torus_grid(3, 3)
    doc = complex_to_json(cw)
    back = parse(doc)
    assert isinstance(back, CWComplex)
    assert sorted(back.cells()) == sorted(cw.cells())
    assert back.incidence == cw.incidence
    assert dumps(complex_to_json(back)) == dumps(doc)
    # kind is optional when there are no ranks or maps
    bare = {"cells": doc["cells"], "covers": doc["covers"]}
    assert isinstance(parse(bare), CWComplex)


def test_sheaf_round_trip_mod_p():
    base = torus_grid(2, 3)
    ring = {c for c in base.cells() if c[0] in "vw" and c[3:5] == "00"}
    sheaf = pushforward_constant(base, ring, field=fp(7))
    doc = sheaf_to_json(sheaf)
    back = parse(doc)
    assert isinstance(back, CellularSheaf)
    assert back.field == fp(7)
    assert back.stalk_rank == sheaf.stalk_rank
    assert set(back.restriction) == set(sheaf.restriction)
    for key, m in sheaf.restriction.items():
        assert back.restriction[key].data == m.data
    assert dumps(sheaf_to_json(back)) == dumps(doc)


def test_sheaf_omitted_map_stays_omitted():
    cw = circle()
    sheaf = CellularSheaf(
        cw, RATIONAL, {c: 1 for c in cw.cells()},
        {("a", "e"): parse(good_sheaf_doc()).restriction[("u", "e")]},
    )
    doc = sheaf_to_json(sheaf)
    tagged = {(e["from"], e["to"]): ("map" in e) for e in doc["covers"]}
    assert tagged[("a", "e")] and not tagged[("b", "f")]
    back = parse(doc)
    assert set(back.restriction) == {("a", "e")}
    assert dumps(sheaf_to_json(back)) == dumps(doc)


def test_parametrization_round_trip():
    sheaf = constant_sheaf(circle(), rank=2)
    param = compile_sheaf(sheaf)
    doc = param_to_json(param)
    back = parse(doc)
    assert back.stalk_rank == param.stalk_rank
    assert betti(back.assemble()).betti == [2, 2]
    assert dumps(param_to_json(back)) == dumps(doc)
    assert all(entry["incidence"] == 1 for entry in doc["covers"])


def test_reduced_document():
    param = compile_sheaf(constant_sheaf(circle()))
    data = scythe(param, track_equivalence=True)
    eq = data.equivalence
    doc = reduced_to_json(data, eq)
    assert doc["kind"] == "reduced"
    assert doc["matching"] == [
        {"lower": x, "upper": y} for x, y in data.matching.pairs
    ]
    eqdoc = doc["equivalence"]
    assert set(eqdoc) == {"psi", "phi", "theta", "source_cells", "target_cells"}
    assert eqdoc["psi"]["0"] == eq.psi_matrix(0).to_json()
    assert eqdoc["source_cells"]["1"] == ["e", "f"]
    back = parse(doc)
    assert betti(back.assemble()).betti == [1, 1]


def test_cover_round_trip():
    cw, pieces = three_arc_cover_cells()
    cover = Cover(cw, pieces)
    doc = cover_to_json(cover)
    back = parse_cover(doc, cw)
    assert back.pieces == cover.pieces
    assert dumps(cover_to_json(back)) == dumps(doc)
    with pytest.raises(ParseError):
        parse(doc)  # needs a base complex
    with pytest.raises(ParseError):
        parse_cover({"kind": "complex", "pieces": []}, cw)


def test_fibers_round_trip():
    _, graph, fibers = torus_reeb()
    doc = fibers_to_json(graph, fibers)
    back_graph, back_fibers = parse(doc)
    assert sorted(back_graph.cells()) == sorted(graph.cells())
    assert back_fibers == {k: frozenset(v) for k, v in fibers.items()}
    assert dumps(fibers_to_json(back_graph, back_fibers)) == dumps(doc)


def test_profile_parsing():
    prof = sheaf_cohomology(constant_sheaf(circle()))
    doc = dict(prof.to_json(), kind="profile")
    assert parse(doc).betti == [1, 1]
    assert parse_profile({"betti": [1, 0, 2]}).betti == [1, 0, 2]
    with pytest.raises(ParseError):
        parse_profile({"betti": [1, -1]})
    with pytest.raises(ParseError):
        parse_profile({"betti": "nope"})


def good_sheaf_doc():
    return {
        "kind": "sheaf",
        "cells": [
            {"id": "u", "dim": 0, "rank": 1},
            {"id": "v", "dim": 0, "rank": 1},
            {"id": "e", "dim": 1, "rank": 1},
        ],
        "covers": [
            {"from": "u", "to": "e", "incidence": -1, "map": [["1"]]},
            {"from": "v", "to": "e", "incidence": 1, "map": [["1"]]},
        ],
    }


def test_parse_error_paths():
    doc = good_sheaf_doc()
    assert isinstance(parse(doc), CellularSheaf)
    # kindless documents infer sheaf from the ranks
    kindless = {k: v for k, v in doc.items() if k != "kind"}
    assert isinstance(parse(kindless), CellularSheaf)

    cases = [
        ("unknown kind", lambda d: d.update(kind="poset")),
        ("cells not a list", lambda d: d.update(cells={})),
        ("missing id", lambda d: d["cells"][0].pop("id")),
        ("empty id", lambda d: d["cells"][0].update(id="")),
        ("negative dim", lambda d: d["cells"][0].update(dim=-1)),
        ("boolean dim", lambda d: d["cells"][0].update(dim=True)),
        ("partial ranks", lambda d: d["cells"][1].pop("rank")),
        ("duplicate cover", lambda d: d["covers"].append(dict(d["covers"][0]))),
        ("incidence 2", lambda d: d["covers"][0].update(incidence=2)),
        ("map row count", lambda d: d["covers"][0].update(map=[["1"], ["0"]])),
        ("map entry type", lambda d: d["covers"][0].update(map=[[None]])),
        ("bad literal", lambda d: d["covers"][0].update(map=[["1/"]])),
        ("endpoint not a cell", lambda d: d["covers"][0].update({"from": "w"})),
    ]
    for label, mutate in cases:
        broken = json.loads(json.dumps(good_sheaf_doc()))
        mutate(broken)
        with pytest.raises(ParseError):
            parse(broken)
        assert label  # keeps the tuple honest

    with pytest.raises(ParseError):
        parse(dict(good_sheaf_doc(), kind="complex"))
    no_ranks = good_sheaf_doc()
    for cell in no_ranks["cells"]:
        del cell["rank"]
    for cov in no_ranks["covers"]:
        del cov["map"]
    with pytest.raises(ParseError):
        parse(no_ranks)  # sheaf kind demands ranks
    with_map = good_sheaf_doc()
    for cell in with_map["cells"]:
        del cell["rank"]
    with pytest.raises(ParseError):
        parse(dict(with_map, kind=None))  # maps need ranks


def test_parametrization_rejects_signed_incidence():
    doc = good_sheaf_doc()
    doc["kind"] = "parametrization"
    with pytest.raises(ParseError):
        parse(doc)
    doc["covers"][0]["incidence"] = 1
    back = parse(doc)
    assert betti(back.assemble()).betti == [1, 0]


def test_field_handling():
    doc = good_sheaf_doc()
    assert parse(doc).field == RATIONAL
    doc["field"] = {"kind": "fp", "p": 7}
    doc["covers"][0]["map"] = [["9"]]
    back = parse(doc)
    assert back.field == fp(7)
    assert sheaf_to_json(back)["covers"][0]["map"] == [["2"]]
    doc["field"] = {"kind": "fp", "p": 6}
    with pytest.raises(ParseError):
        parse(doc)


def test_data_files_match_builders(data_dir):
    surface, graph, fibers = genus2_reeb()
    torus, tgraph, tfibers = torus_reeb()
    circle8, two_arcs = two_arc_cover_cells()
    circle6, three_arcs = three_arc_cover_cells()
    expected = {
        "genus2_surface.json": complex_to_json(surface),
        "genus2_reeb.json": fibers_to_json(graph, fibers),
        "torus.json": complex_to_json(torus),
        "torus_reeb.json": fibers_to_json(tgraph, tfibers),
        "circle8.json": complex_to_json(circle8),
        "two_arc_cover.json": cover_to_json(Cover(circle8, two_arcs)),
        "circle6.json": complex_to_json(circle6),
        "three_arc_cover.json": cover_to_json(Cover(circle6, three_arcs)),
    }
    on_disk = sorted(p.name for p in data_dir.glob("*.json"))
    assert on_disk == sorted(expected)
    for name, doc in expected.items():
        assert (data_dir / name).read_text() == dumps(doc), name
