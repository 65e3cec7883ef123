"""Write the shipped matroid files into corpus/ (or a directory given on the command line)."""

import itertools
import sys
from pathlib import Path

from tutteconv.corpus import FANO_MATRIX, complete_graph_edges
from tutteconv.io import save_spec
from tutteconv.matroid import BasesSpec, GF2Spec, GraphicSpec, UniformSpec


def grid_edges(rows, cols):
    idx = lambda r, c: r * cols + c
    edges = []
    for r, c in itertools.product(range(rows), range(cols)):
        if c + 1 < cols:
            edges.append((idx(r, c), idx(r, c + 1)))
        if r + 1 < rows:
            edges.append((idx(r, c), idx(r + 1, c)))
    return edges


SPECS = {
    "U2_4": UniformSpec(2, 4),
    "U1_2": UniformSpec(1, 2),
    "U3_6": UniformSpec(3, 6),
    "loop": UniformSpec(0, 1),
    "isthmus": UniformSpec(1, 1),
    "loop_isthmus": BasesSpec(2, ((1,),)),
    "C4": GraphicSpec(4, ((0, 1), (1, 2), (2, 3), (3, 0))),
    "K4": GraphicSpec(4, tuple(complete_graph_edges(4))),
    "K5": GraphicSpec(5, tuple(complete_graph_edges(5))),
    "K6": GraphicSpec(6, tuple(complete_graph_edges(6))),
    "fano": GF2Spec(FANO_MATRIX),
    "grid3x4": GraphicSpec(12, tuple(grid_edges(3, 4))),
    "wheel10": GraphicSpec(11, tuple([(0, i) for i in range(1, 11)]
                                     + [(i, i % 10 + 1) for i in range(1, 11)])),
    "multigraph": GraphicSpec(3, ((0, 1), (0, 1), (1, 2), (2, 2), (0, 2))),
}


def main(out_dir="corpus"):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name, spec in SPECS.items():
        save_spec(spec, out / f"{name}.json")
        print(out / f"{name}.json")


if __name__ == "__main__":
    main(*sys.argv[1:])
