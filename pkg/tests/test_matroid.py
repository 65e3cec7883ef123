import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tutteconv import corpus as cp
from tutteconv import matroid as mt
from tutteconv.errors import InvalidSpec, OverlappingSets, SizeExceeded

import oracles


def table(M):
    return M.rank_table.tolist()


# -- build and rank ---------------------------------------------------------


def test_uniform_rank():
    assert mt.uniform(2, 4).rank(0b0111) == 2


def test_k4_rank(k4):
    assert k4.full_rank == 3
    # edges 0=(0,1), 1=(0,2), 3=(1,2) form a triangle
    assert k4.rank(0b1011) == 2


def test_bases_backend_u12():
    M = mt.from_bases(2, [[0], [1]])
    assert table(M) == [0, 1, 1, 1]
    assert M.is_isomorphic(mt.uniform(1, 2))


def test_empty_set_rank():
    assert mt.uniform(2, 4).rank(0) == 0
    assert mt.loop().rank(0b1) == 0


@pytest.mark.parametrize("vertices, edges", [
    (4, cp.complete_graph_edges(4)),
    (5, cp.complete_graph_edges(5)),
    (3, [(0, 1), (0, 1), (1, 1), (1, 2), (2, 0)]),
    (6, [(0, 1), (2, 3), (4, 5), (1, 2)]),
    (2, [(0, 0), (1, 1)]),
])
def test_graphic_matches_union_find(vertices, edges):
    M = mt.graphic(vertices, edges)
    n = len(edges)
    assert table(M) == oracles.rank_list(n, lambda s: oracles.union_find_rank(edges, s))


@settings(max_examples=60)
@given(st.integers(1, 4).flatmap(
    lambda rows: st.lists(st.lists(st.integers(0, 1), min_size=rows, max_size=rows),
                          min_size=1, max_size=9)))
def test_gf2_matches_elimination(columns):
    matrix = [list(r) for r in zip(*columns)]
    M = mt.gf2(matrix)
    assert table(M) == oracles.rank_list(len(columns), lambda s: oracles.gf2_rank([columns[i] for i in s]))


def test_gf2_chunked_path_matches_oracle():
    # 18 columns forces the high/low split of the rank-table builder
    rng = np.random.default_rng(3)
    matrix = rng.integers(0, 2, size=(6, 18)).tolist()
    M = mt.gf2(matrix)
    columns = list(zip(*matrix))
    sample = rng.integers(0, 1 << 18, 400)
    for mask in sample:
        s = [i for i in range(18) if int(mask) >> i & 1]
        assert M.rank(int(mask)) == oracles.gf2_rank([columns[i] for i in s])


def test_bases_rank_is_max_intersection():
    bases = [[0, 1], [0, 2], [1, 2], [1, 3], [2, 3], [0, 3]]
    M = mt.from_bases(4, bases)
    masks = [mt.to_mask(b) for b in bases]
    assert table(M) == [max(bin(m & b).count("1") for b in masks) for m in range(16)]


@pytest.mark.parametrize("bad", [
    lambda: mt.uniform(3, 2),
    lambda: mt.graphic(2, [(0, 2)]),
    lambda: mt.gf2([[1, 0], [1]]),
    lambda: mt.gf2([[2, 0]]),
    lambda: mt.from_bases(3, []),
    lambda: mt.from_bases(3, [[0, 1], [2]]),
    lambda: mt.from_bases(4, [[0, 1], [2, 3]]),  # exchange fails
    lambda: mt.from_bases(2, [[0], [0]]),
    lambda: mt.Matroid(2, [0, 1, 1, 0]),
    lambda: mt.Matroid(2, [0, 2, 1, 2]),
])
def test_invalid_specs_rejected(bad):
    with pytest.raises(InvalidSpec):
        bad()


def test_size_limits():
    with pytest.raises(SizeExceeded):
        mt.uniform(1, 25)
    with pytest.raises(SizeExceeded):
        mt.uniform(2, 10).canonical_form()


def test_submodularity_violation_detected():
    # 0 and 1 parallel: a genuine matroid
    mt.Matroid(3, [0, 1, 1, 1, 1, 2, 2, 2])
    # every pair has rank 1 yet the triple has rank 2
    bad = [0, 1, 1, 1, 1, 1, 1, 2]
    with pytest.raises(InvalidSpec):
        mt.Matroid(3, bad)


def test_large_build_uses_spot_checks():
    M = cp.complete_graph(6)
    assert M.n == 15 and M.full_rank == 5


def _brute_submodular(M):
    t = table(M)
    N = 1 << M.n
    return all(t[a | b] + t[a & b] <= t[a] + t[b] for a in range(N) for b in range(N))


@pytest.mark.parametrize("name", ["K4", "Fano", "C4", "U3_5", "random03", "random11"])
def test_full_submodularity_brute(corpus, name):
    M = dict(corpus)[name]
    assert _brute_submodular(M)


# -- dual and minors -------------------------------------------------------


def test_dual_examples(k4):
    assert mt.uniform(1, 2).dual() == mt.uniform(1, 2)
    assert table(mt.isthmus().dual()) == table(mt.loop())
    assert k4.dual().dual() == k4
    for r in range(5):
        assert table(mt.uniform(r, 4).dual()) == table(mt.uniform(4 - r, 4))


def test_dual_formula_everywhere(corpus):
    for _, M in corpus:
        D = M.dual()
        t = table(M)
        for A in range(1 << M.n):
            assert D.rank(A) == bin(A).count("1") + t[M.ground ^ A] - M.full_rank
        assert D.dual() == M
        # restriction to A followed by duality has rank |A| - r(A)
        for A in range(0, 1 << M.n, 7):
            assert M.restrict(A).dual().full_rank == bin(A).count("1") - M.rank(A)


def test_minor_examples():
    assert table(mt.uniform(1, 2).minor(contract=0b01)) == table(mt.loop())
    M = cp.fano()
    assert M.minor(0, 0) == M
    assert mt.loop().minor(0, 0b1).n == 0
    with pytest.raises(OverlappingSets):
        M.minor(0b11, 0b10)


def test_minor_reindexes_in_order(k4):
    kept = 0b101010
    N = k4.minor(contract=0b000001, delete=0b010100)
    for local in range(1 << N.n):
        glob = mt.expand(local, kept)
        assert N.rank(local) == k4.rank(glob | 1) - k4.rank(1)
        assert mt.compress(glob, kept) == local


@settings(max_examples=80)
@given(st.data())
def test_minor_composition(data):
    _, M = data.draw(st.sampled_from(cp.acceptance_corpus()[:40]))
    n = M.n
    labels = data.draw(st.lists(st.sampled_from("cdk"), min_size=n, max_size=n))
    C1 = mt.to_mask(i for i, l in enumerate(labels) if l == "c")
    D1 = mt.to_mask(i for i, l in enumerate(labels) if l == "d")
    N = M.minor(C1, D1)
    kept = M.ground & ~(C1 | D1)
    labels2 = data.draw(st.lists(st.sampled_from("cdk"), min_size=N.n, max_size=N.n))
    C2 = mt.to_mask(i for i, l in enumerate(labels2) if l == "c")
    D2 = mt.to_mask(i for i, l in enumerate(labels2) if l == "d")
    assert N.minor(C2, D2) == M.minor(C1 | mt.expand(C2, kept), D1 | mt.expand(D2, kept))


# -- closure and flats -------------------------------------------------------


def test_closure_examples():
    assert mt.uniform(1, 2).closure(0b1) == 0b11
    assert mt.uniform(2, 4).closure(0) == 0
    assert mt.loop().closure(0) == 0b1


def test_flats_examples():
    assert mt.uniform(1, 2).flats() == [0, 0b11]
    assert mt.loop().flats() == [0b1]
    assert mt.loop().flats(isthmus_free_only=True) == [0b1]
    assert mt.isthmus().flats(isthmus_free_only=True) == [0]


def test_closure_axioms(small_corpus):
    for _, M in small_corpus:
        N = 1 << M.n
        cl = [M.closure(A) for A in range(N)]
        assert cl == M.closures().tolist()
        for A in range(N):
            assert cl[A] & A == A
            assert cl[cl[A]] == cl[A]
        for A in range(0, N, 3):
            for B in range(0, N, 5):
                if A & B == A:
                    assert cl[A] & cl[B] == cl[A]
        flats = M.flats()
        assert flats == sorted(flats)
        fs = set(flats)
        for F, G in itertools.combinations(flats, 2):
            assert F & G in fs


def test_isthmus_free_flats_by_definition(small_corpus):
    for _, M in small_corpus:
        expected = [F for F in M.flats()
                    if all(M.rank(F & ~(1 << e)) == M.rank(F) for e in mt.elements(F))]
        assert M.flats(isthmus_free_only=True) == expected


def test_loops_and_isthmuses(k4):
    assert k4.loops_and_isthmuses() == (0, 0)
    assert mt.loop().loops_and_isthmuses() == (1, 0)
    assert cp.path_graph(2).loops_and_isthmuses() == (0, 0b11)


# -- bases, sums ----------------------------------------------------------


def test_bases(k4):
    assert len(mt.uniform(2, 4).bases()) == 6
    assert len(k4.bases()) == 16 == oracles.kirchhoff_spanning_trees(4, cp.complete_graph_edges(4))
    assert mt.empty().bases() == [0]
    assert all(k4.is_basis(b) for b in k4.bases())


def test_direct_sum():
    assert table(mt.direct_sum(mt.loop(), mt.isthmus())) == [0, 0, 1, 1]
    F = cp.fano()
    assert mt.direct_sum(F, mt.empty()) == F
    assert mt.direct_sum(mt.isthmus(), mt.isthmus()) == mt.uniform(2, 2)
    with pytest.raises(SizeExceeded):
        mt.direct_sum(mt.uniform(1, 12), mt.uniform(1, 13))


# -- canonical form -------------------------------------------------------


def test_canonical_examples():
    li = mt.direct_sum(mt.loop(), mt.isthmus())
    il = mt.direct_sum(mt.isthmus(), mt.loop())
    assert li.canonical_form() == il.canonical_form()
    assert mt.from_bases(2, [[0], [1]]).canonical_form() == mt.uniform(1, 2).canonical_form()
    u24, c4 = mt.uniform(2, 4), cp.cycle_graph(4)
    assert u24.canonical_form() != c4.canonical_form()
    assert not oracles.brute_isomorphic(4, table(u24), 4, table(c4))


def test_canonical_matches_brute_isomorphism(corpus):
    small = [M for _, M in corpus if 2 <= M.n <= 4]
    for A, B in itertools.combinations(small, 2):
        same = oracles.brute_isomorphic(A.n, table(A), B.n, table(B))
        assert (A.canonical_form() == B.canonical_form()) == same


def test_canonical_invariant_under_relabeling(corpus):
    rng = np.random.default_rng(11)
    for _, M in corpus:
        if M.n > 7:
            continue
        key = M.canonical_form()
        for _ in range(100):
            perm = [int(v) for v in rng.permutation(M.n)]
            R = mt.Matroid(M.n, oracles.relabel(M.n, table(M), perm), validate=False)
            assert R.canonical_form() == key


def test_canonical_is_lex_least_relabeling(corpus):
    for _, M in corpus:
        if M.n <= 6:
            assert M.canonical_form() == (M.n, oracles.brute_canonical(M.n, table(M)))


def test_canonical_form_nine_elements():
    M = mt.uniform(4, 9)
    assert M.canonical_form() == (9, M.rank_table.tobytes())
