import itertools

import pytest

from tutteconv import convolution as cv
from tutteconv import corpus as cp
from tutteconv import engines as eng
from tutteconv import matroid as mt
from tutteconv.convolution import convolve, delta, rho, zeta
from tutteconv.errors import SizeExceeded
from tutteconv.poly import X, Y

import oracles


def test_delta():
    assert delta()(mt.empty()) == 1
    assert delta()(mt.loop()) == 0
    assert convolve(delta(), zeta(X, Y))(mt.uniform(1, 2)) == zeta(X, Y)(mt.uniform(1, 2))


def test_zeta():
    assert zeta(X, Y)(mt.isthmus()) == X
    assert zeta(X, Y)(mt.loop()) == Y
    assert zeta(-X, -Y)(mt.uniform(1, 2)) == X * Y
    assert zeta(2, 3)(mt.uniform(2, 5)) == 4 * 27


def test_convolve_examples():
    U = mt.uniform(1, 2)
    assert convolve(zeta(1, Y), zeta(X, 1))(U).subst(x=X - 1, y=Y - 1) == X + Y
    assert convolve(zeta(1, Y), zeta(X, 1))(U) == eng.tutte_ranksum(U).subst(x=X + 1, y=Y + 1)
    assert convolve(zeta(X, Y), zeta(-X, -Y))(mt.isthmus()) == 0


def test_convolution_by_hand():
    # direct sum over subsets, independent of the memoised evaluator
    f, g = zeta(X, 2), zeta(3, Y)
    for _, M in cp.acceptance_corpus()[:20]:
        expected = sum((f(M.restrict(A)) * g(M.contract(A)) for A in range(1 << M.n)), start=0 * X)
        assert convolve(f, g)(M) == expected


BASIS = {"zxy": zeta(X, Y), "z-11": zeta(-1, 1), "z1-1": zeta(1, -1), "d": delta()}


@pytest.mark.parametrize("names", list(itertools.product(BASIS, repeat=3)), ids="-".join)
def test_associativity(names, small_corpus):
    f, g, h = (BASIS[k] for k in names)
    for _, M in small_corpus:
        if M.n > 6:
            continue
        assert convolve(convolve(f, g), h)(M) == convolve(f, convolve(g, h))(M)


def test_associativity_n8():
    f, g, h = BASIS["zxy"], BASIS["z-11"], BASIS["z1-1"]
    for M in (mt.uniform(4, 8), mt.uniform(3, 8)):
        assert convolve(convolve(f, g), h)(M) == convolve(f, convolve(g, h))(M)


def test_identity(small_corpus):
    f = zeta(X + 1, Y - 2)
    for _, M in small_corpus:
        assert convolve(delta(), f)(M) == f(M) == convolve(f, delta())(M)


def test_zeta_inverse(small_corpus):
    assert cv.verify_zeta_inverse(mt.empty())
    assert cv.verify_zeta_inverse(mt.loop())
    for _, M in small_corpus:
        assert cv.verify_zeta_inverse(M)
        assert cv.verify_unit_zeta_inverse(M)


def test_shift_bridge_and_tutte_product(small_corpus):
    for _, M in small_corpus:
        T = oracles.sympy_rank_sum(M.n, M.rank_table.tolist())
        assert cv.verify_shift_bridge(M, T)
        assert cv.verify_tutte_product(M, T)


def test_rho_examples(k4):
    assert rho(X - 1, Y - 1, 1, 1)(k4) == eng.tutte_ranksum(k4)
    assert rho(-1, Y - 1, 1, 1)(mt.isthmus()) == 0
    assert rho(X - 1, -1, 1, 1)(mt.loop()) == 0


def test_rho_specializations(small_corpus):
    for _, M in small_corpus:
        assert cv.rho_specializations_hold(M, eng.tutte_ranksum(M))


@pytest.mark.parametrize("M", [mt.empty(), mt.isthmus(), mt.uniform(1, 2), mt.uniform(2, 3),
                               mt.direct_sum(mt.loop(), mt.isthmus())], ids=str)
def test_rho_factorization_examples(M):
    assert cv.verify_rho_factorization(M)


def test_recursion_functional_examples():
    lhs = lambda M: convolve(zeta(-1, -Y), cv.TutteAt(X + 1, Y + 1))(M)
    assert lhs(mt.isthmus()) == X
    assert lhs(mt.loop()) == 1
    assert lhs(mt.uniform(2, 4)) == X ** 2
    assert cv.verify_recursion_functional(cp.fano())


def test_tutte_at_is_shifted_ranksum(k4):
    assert cv.TutteAt(X + 1, Y + 1)(k4) == eng.tutte_ranksum(k4).subst(x=X + 1, y=Y + 1)
    assert cv.TutteAt()(k4) == eng.tutte_ranksum(k4)


def test_tutte_functional_matches_engine(small_corpus):
    for _, M in small_corpus:
        assert cv.tutte_functional()(M) == eng.tutte_ranksum(M)


def test_size_caps():
    big = mt.uniform(2, 17)
    assert zeta(X, Y)(big) == X ** 2 * Y ** 15
    with pytest.raises(SizeExceeded):
        convolve(zeta(X, Y), delta())(big)
    nested = convolve(convolve(zeta(X, Y), delta()), delta())
    with pytest.raises(SizeExceeded):
        nested(mt.uniform(2, 15))
    with pytest.raises(SizeExceeded):
        cv.verify_rho_factorization(mt.uniform(2, 11))
    with pytest.raises(SizeExceeded):
        cv.verify_recursion_functional(mt.uniform(2, 13))
