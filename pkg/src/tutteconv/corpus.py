"""Named test matroids and a seeded generator of random bases-list matroids."""

from __future__ import annotations

import itertools

import numpy as np

from . import matroid as mt
from .matroid import Matroid


def complete_graph_edges(k: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(k), 2))


def complete_graph(k: int) -> Matroid:
    return mt.graphic(k, complete_graph_edges(k))


def cycle_graph(k: int) -> Matroid:
    return mt.graphic(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Matroid:
    """Path with k edges."""
    return mt.graphic(k + 1, [(i, i + 1) for i in range(k)])


FANO_MATRIX = (
    (1, 0, 0, 1, 1, 0, 1),
    (0, 1, 0, 1, 0, 1, 1),
    (0, 0, 1, 0, 1, 1, 1),
)


def fano() -> Matroid:
    return mt.gf2(FANO_MATRIX)


def loop_plus_isthmus() -> Matroid:
    return mt.direct_sum(mt.loop(), mt.isthmus())


def uniform_family(max_n: int = 7) -> list[tuple[str, Matroid]]:
    return [(f"U{r}_{n}", mt.uniform(r, n)) for n in range(max_n + 1) for r in range(n + 1)]


def random_bases_matroid(rng: np.random.Generator, max_n: int = 8) -> Matroid:
    """A bases-list matroid read off a random binary matrix or multigraph."""
    n = int(rng.integers(1, max_n + 1))
    if rng.random() < 0.5:
        rows = int(rng.integers(1, 5))
        source = mt.gf2(rng.integers(0, 2, size=(rows, n)).tolist())
    else:
        v = int(rng.integers(2, 6))
        edges = [tuple(int(a) for a in rng.integers(0, v, 2)) for _ in range(n)]
        source = mt.graphic(v, edges)
    bases = [mt.elements(b) for b in source.bases()]
    return mt.from_bases(n, bases)


def random_bases_matroids(count: int = 20, seed: int = 20240601, max_n: int = 8) -> list[Matroid]:
    rng = np.random.default_rng(seed)
    return [random_bases_matroid(rng, max_n) for _ in range(count)]


def acceptance_corpus() -> list[tuple[str, Matroid]]:
    """Uniform matroids up to 7 elements, K4, K5, C4, Fano, loop+isthmus and
    twenty random bases-list matroids on at most 8 elements."""
    out = uniform_family(7)
    out += [
        ("K4", complete_graph(4)),
        ("K5", complete_graph(5)),
        ("C4", cycle_graph(4)),
        ("Fano", fano()),
        ("loop+isthmus", loop_plus_isthmus()),
    ]
    out += [(f"random{i:02d}", M) for i, M in enumerate(random_bases_matroids())]
    return out
