"""Regenerate the JSON fixtures shipped under src/scythe/data.

The builders in scythe.complexes are the source of truth; the data files
exist so the CLI has something to chew on out of the box.  Run from the
repository root after changing a builder.
"""

import pathlib

from scythe.complexes import (
    circle_subdivided,
    genus2_reeb,
    three_arc_cover_cells,
    torus_reeb,
    two_arc_cover_cells,
)
from scythe.nerve import Cover
from scythe.serialize import complex_to_json, cover_to_json, dumps, fibers_to_json

OUT = pathlib.Path(__file__).resolve().parent.parent / "src" / "scythe" / "data"


def write(name, doc):
    path = OUT / name
    path.write_text(dumps(doc))
    print("wrote", path)


def main():
    OUT.mkdir(parents=True, exist_ok=True)

    surface, graph, fibers = genus2_reeb()
    write("genus2_surface.json", complex_to_json(surface))
    write("genus2_reeb.json", fibers_to_json(graph, fibers))

    torus, tgraph, tfibers = torus_reeb()
    write("torus.json", complex_to_json(torus))
    write("torus_reeb.json", fibers_to_json(tgraph, tfibers))

    circle8, two_arcs = two_arc_cover_cells()
    write("circle8.json", complex_to_json(circle8))
    write("two_arc_cover.json", cover_to_json(Cover(circle8, two_arcs)))

    circle6, three_arcs = three_arc_cover_cells()
    write("circle6.json", complex_to_json(circle6))
    write("three_arc_cover.json", cover_to_json(Cover(circle6, three_arcs)))


if __name__ == "__main__":
    main()
