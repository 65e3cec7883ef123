"""Tutte polynomial engines, basis activities and the basis decomposition.

Six routes to T_M(x, y) that share nothing beyond the rank table:

* ``ranksum``     corank-nullity expansion over all subsets
* ``delcon``      memoised deletion-contraction
* ``activities``  internal/external activity generating function over bases
* ``conv``        sum over all subsets A of T_{M|A}(0, y) T_{M/A}(x, 0)
* ``conv-flats``  the same sum restricted to isthmus-free flats
* ``recursion``   the inverse-zeta recursion over contractions
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from math import comb
from typing import Callable, Sequence

import numpy as np

from .errors import (ActivityTransferViolation, DecompositionNotUnique,
                     InvalidOrdering, NotABasis, SizeExceeded)
from .matroid import Matroid, compress, elements, expand, popcounts, submasks
from .poly import Poly


class TutteEngine(str, enum.Enum):
    RANKSUM = "ranksum"
    DELCON = "delcon"
    ACTIVITIES = "activities"
    CONV_SUBSETS = "conv"
    CONV_FLATS = "conv-flats"
    RECURSION = "recursion"


SIZE_CAPS = {
    TutteEngine.RANKSUM: 20,
    TutteEngine.DELCON: 24,
    TutteEngine.ACTIVITIES: 20,
    TutteEngine.CONV_SUBSETS: 16,
    TutteEngine.CONV_FLATS: 20,
    TutteEngine.RECURSION: 14,
}


def _require(M: Matroid, cap: int, what: str) -> None:
    if M.n > cap:
        raise SizeExceeded(f"{what} is limited to n <= {cap}, got n = {M.n}")


def within_cap(engine: TutteEngine | str, M: Matroid) -> bool:
    return M.n <= SIZE_CAPS[TutteEngine(engine)]


# ---------------------------------------------------------------------------
# orderings


def check_ordering(ordering: Sequence[int] | None, n: int) -> list[int]:
    """Validate an ordering, listed from smallest to largest element."""
    if ordering is None:
        return list(range(n))
    ordering = [int(e) for e in ordering]
    if sorted(ordering) != list(range(n)):
        raise InvalidOrdering(f"{ordering} is not a permutation of 0..{n - 1}")
    return ordering


def induced_ordering(ordering: Sequence[int], kept: int) -> list[int]:
    """Ordering of a minor on ``kept``, re-indexed to the minor's ground set."""
    local = {e: j for j, e in enumerate(elements(kept))}
    return [local[e] for e in ordering if kept >> e & 1]


# ---------------------------------------------------------------------------
# rank-sum


def corank_nullity_counts(M: Matroid) -> np.ndarray:
    """counts[i, j] = number of subsets with corank i and nullity j."""
    r = M.rank_table.astype(np.int64)
    pc = popcounts(M.n).astype(np.int64)
    cor = M.full_rank - r
    nul = pc - r
    size = M.n + 1
    return np.bincount(cor * size + nul, minlength=size * size).reshape(size, size)


def poly_from_shifted_counts(counts) -> Poly:
    """Expand sum c[i][j] (x-1)^i (y-1)^j exactly."""
    counts = [[int(v) for v in row] for row in counts]
    a_dim = len(counts)
    b_dim = len(counts[0]) if counts else 0
    # expand (x-1)^i first, then (y-1)^j
    half = [[0] * b_dim for _ in range(a_dim)]
    for i in range(a_dim):
        for a in range(i + 1):
            s = comb(i, a) * (-1) ** (i - a)
            row_in = counts[i]
            row_out = half[a]
            for j in range(b_dim):
                if row_in[j]:
                    row_out[j] += s * row_in[j]
    terms = {}
    for a in range(a_dim):
        row = half[a]
        for j in range(b_dim):
            c = row[j]
            if not c:
                continue
            for b in range(j + 1):
                key = (a, b, 0, 0)
                terms[key] = terms.get(key, 0) + c * comb(j, b) * (-1) ** (j - b)
    return Poly(terms)


def tutte_ranksum(M: Matroid) -> Poly:
    _require(M, SIZE_CAPS[TutteEngine.RANKSUM], "rank-sum")
    return poly_from_shifted_counts(corank_nullity_counts(M))


# ---------------------------------------------------------------------------
# deletion-contraction


def tutte_delcon(M: Matroid) -> Poly:
    """Deletion-contraction on (kept, contracted) masks of ``M``.

    Loops and isthmuses are split off as y and x factors first; the pivot is
    the lowest remaining element.  Since the minor's rank function depends on
    the contracted set only through its closure, the memo is keyed on
    ``(kept, closure(contracted))``.
    """
    _require(M, SIZE_CAPS[TutteEngine.DELCON], "deletion-contraction")
    rank = M.rank_table.tolist()
    n = M.n
    bits = [1 << e for e in range(n)]
    memo: dict[tuple[int, int], Poly] = {}

    def closure(C: int) -> int:
        rc = rank[C]
        cl = C
        for b in bits:
            if not cl & b and rank[C | b] == rc:
                cl |= b
        return cl

    def solve(kept: int, C: int) -> Poly:
        rc = rank[C]
        rk = rank[kept | C]
        loops = isth = 0
        nl = ni = 0
        for b in bits:
            if kept & b:
                if rank[C | b] == rc:
                    loops |= b
                    nl += 1
                elif rank[(kept ^ b) | C] < rk:
                    isth |= b
                    ni += 1
        rest = kept & ~(loops | isth)
        factor = Poly.monomial(x=ni, y=nl)
        if not rest:
            return factor
        key = (rest, closure(C))
        core = memo.get(key)
        if core is None:
            p = rest & -rest
            core = solve(rest ^ p, C) + solve(rest ^ p, C | p)
            memo[key] = core
        return core * factor

    return solve(M.ground, 0)


# ---------------------------------------------------------------------------
# activities


@dataclass(frozen=True)
class ActivityReport:
    basis: int
    internally_active: int
    externally_active: int
    ordering: tuple[int, ...]


def activities(M: Matroid, ordering: Sequence[int] | None, B: int) -> ActivityReport:
    """Internal and external activities of one basis.

    e in B is internally active when it is the least element of its
    fundamental cocircuit; e outside B is externally active when it is the
    least element of its fundamental circuit.
    """
    order = check_ordering(ordering, M.n)
    if not M.is_basis(B):
        raise NotABasis(f"{elements(B)} is not a basis")
    pos = {e: i for i, e in enumerate(order)}
    basis = M.basis_indicator()
    ia = ea = 0
    for e in range(M.n):
        be = 1 << e
        others = [f for f in range(M.n) if (B >> f & 1) != (B >> e & 1)]
        # swapping e with f is a basis move iff f lies in e's fundamental (co)circuit
        killed = any(pos[f] < pos[e] and basis[B ^ be ^ (1 << f)] for f in others)
        if not killed:
            if B & be:
                ia |= be
            else:
                ea |= be
    return ActivityReport(B, ia, ea, tuple(order))


def activity_counts(M: Matroid, ordering: Sequence[int] | None = None):
    """Bases as an array together with |IA| and |EA| for each of them."""
    order = check_ordering(ordering, M.n)
    indicator = M.basis_indicator()
    bs = np.nonzero(indicator)[0].astype(np.int64)
    ia = np.zeros(len(bs), dtype=np.int64)
    ea = np.zeros(len(bs), dtype=np.int64)
    for i, e in enumerate(order):
        be = 1 << e
        in_b = (bs & be) != 0
        killed = np.zeros(len(bs), dtype=bool)
        for f in order[:i]:
            bf = 1 << f
            differ = in_b != ((bs & bf) != 0)
            killed |= differ & indicator[bs ^ be ^ bf]
        ia += in_b & ~killed
        ea += ~in_b & ~killed
    return bs, ia, ea


def tutte_activities(M: Matroid, ordering: Sequence[int] | None = None) -> Poly:
    _require(M, SIZE_CAPS[TutteEngine.ACTIVITIES], "activities")
    _, ia, ea = activity_counts(M, ordering)
    size = M.n + 1
    hist = np.bincount(ia * size + ea, minlength=size * size)
    terms = {}
    for k in np.nonzero(hist)[0]:
        terms[(int(k) // size, int(k) % size, 0, 0)] = int(hist[k])
    return Poly(terms)


# ---------------------------------------------------------------------------
# convolution-formula engines


def _restriction_at_x0(M: Matroid, A: int) -> Poly:
    return poly_from_shifted_counts(corank_nullity_counts(M.restrict(A))).subst(x=0)


def _contraction_at_y0(M: Matroid, A: int) -> Poly:
    return poly_from_shifted_counts(corank_nullity_counts(M.contract(A))).subst(y=0)


def convolution_terms(M: Matroid, subsets: Sequence[int]) -> Poly:
    total = Poly()
    for A in subsets:
        left = _restriction_at_x0(M, A)
        if left:
            total = total + left * _contraction_at_y0(M, A)
    return total


def tutte_conv_subsets(M: Matroid) -> Poly:
    _require(M, SIZE_CAPS[TutteEngine.CONV_SUBSETS], "subset convolution")
    return convolution_terms(M, range(1 << M.n))


def tutte_conv_flats(M: Matroid) -> Poly:
    _require(M, SIZE_CAPS[TutteEngine.CONV_FLATS], "flat convolution")
    return convolution_terms(M, M.flats(isthmus_free_only=True))


# ---------------------------------------------------------------------------
# inverse-zeta recursion


def tutte_recursion(M: Matroid) -> Poly:
    """T_M = (x-1)^r(M) - sum over nonempty A of (-1)^r(A) (1-y)^(|A|-r(A)) T_{M/A}.

    Every contraction M/C is visited once, from the largest C downwards (a
    proper superset always has a larger mask).  Polynomials are dense int64
    coefficient grids; with n <= 14 every partial sum stays below
    2^n * 2^n * 2^n * n < 2^47, so no overflow is possible.
    """
    _require(M, SIZE_CAPS[TutteEngine.RECURSION], "inverse recursion")
    n = M.n
    size = n + 1
    rank = M.rank_table.astype(np.int64)
    pc = popcounts(n).astype(np.int64)
    full = M.ground
    grid = np.zeros((1 << n, size, size), dtype=np.int64)
    x_minus_1 = [[comb(k, a) * (-1) ** (k - a) for a in range(k + 1)] for k in range(size)]
    one_minus_y = [[comb(b, j) * (-1) ** j for j in range(b + 1)] for b in range(size)]
    for C in range(full, -1, -1):
        r_c = int(rank[C])
        acc = np.zeros((size, size), dtype=np.int64)
        for a, c in enumerate(x_minus_1[M.full_rank - r_c]):
            acc[a, 0] = c
        comp = full & ~C
        if comp:
            D = submasks(comp)[1:] | C
            a_rank = rank[D] - r_c
            nullity = pc[D] - pc[C] - a_rank
            sign = np.where(a_rank & 1, -1, 1)
            for b in np.unique(nullity):
                sel = nullity == b
                U = np.tensordot(sign[sel], grid[D[sel]], axes=1)
                for j, c in enumerate(one_minus_y[b]):
                    if j:
                        assert not U[:, size - j:].any()
                        acc[:, j:] -= c * U[:, : size - j]
                    else:
                        acc -= c * U
        grid[C] = acc
    top = grid[0]
    return Poly({(a, b, 0, 0): int(top[a, b]) for a, b in zip(*np.nonzero(top))})


# ---------------------------------------------------------------------------
# dispatch and evaluations


ENGINES: dict[TutteEngine, Callable[..., Poly]] = {
    TutteEngine.RANKSUM: tutte_ranksum,
    TutteEngine.DELCON: tutte_delcon,
    TutteEngine.ACTIVITIES: tutte_activities,
    TutteEngine.CONV_SUBSETS: tutte_conv_subsets,
    TutteEngine.CONV_FLATS: tutte_conv_flats,
    TutteEngine.RECURSION: tutte_recursion,
}


def tutte(M: Matroid, engine: TutteEngine | str = TutteEngine.RANKSUM,
          ordering: Sequence[int] | None = None) -> Poly:
    engine = TutteEngine(engine)
    if engine is TutteEngine.ACTIVITIES:
        return tutte_activities(M, ordering)
    return ENGINES[engine](M)


def reference_tutte(M: Matroid) -> Poly:
    """Rank-sum where it fits, deletion-contraction otherwise."""
    if within_cap(TutteEngine.RANKSUM, M):
        return tutte_ranksum(M)
    return tutte_delcon(M)


@dataclass(frozen=True)
class Specializations:
    bases: int
    independent_sets: int
    spanning_sets: int
    subsets: int


def specializations(M: Matroid, T: Poly | None = None) -> Specializations:
    T = reference_tutte(M) if T is None else T
    return Specializations(
        bases=T.evaluate(x=1, y=1),
        independent_sets=T.evaluate(x=2, y=1),
        spanning_sets=T.evaluate(x=1, y=2),
        subsets=T.evaluate(x=2, y=2),
    )


# ---------------------------------------------------------------------------
# basis decomposition


@dataclass(frozen=True)
class BasisDecomposition:
    basis: int
    b1: int
    b2: int
    flat: int
    internally_active: int
    externally_active: int
    b2_internal_in_contraction: int
    b1_external_in_restriction: int


def _split_ok(M: Matroid, order: list[int], B1: int, B2: int) -> tuple[bool, int]:
    V = M.closure(B1)
    on_v = M.restrict(V)
    if activities(on_v, induced_ordering(order, V), compress(B1, V)).internally_active:
        return False, V
    rest = M.ground & ~V
    on_rest = M.contract(V)
    if activities(on_rest, induced_ordering(order, rest), compress(B2, rest)).externally_active:
        return False, V
    return True, V


def decompose_basis(M: Matroid, ordering: Sequence[int] | None, B: int) -> BasisDecomposition:
    """The unique split B = B1 + B2 with IA of B1 in V and EA of B2 in M/V empty.

    V is the closure of B1.  All 2^|B| splits are tried and exactly one must
    pass; the activities of B in M are then checked against those of the
    parts, IA_M(B) = IA_{M/V}(B2) and EA_M(B) = EA_V(B1).
    """
    order = check_ordering(ordering, M.n)
    if not M.is_basis(B):
        raise NotABasis(f"{elements(B)} is not a basis")
    survivors = []
    for B1 in submasks(B).tolist():
        ok, V = _split_ok(M, order, B1, B ^ B1)
        if ok:
            survivors.append((B1, V))
    if len(survivors) != 1:
        raise DecompositionNotUnique(
            f"basis {elements(B)} has {len(survivors)} valid splits")
    B1, V = survivors[0]
    B2 = B ^ B1
    whole = activities(M, order, B)
    rest = M.ground & ~V
    ia_rest = activities(M.contract(V), induced_ordering(order, rest),
                         compress(B2, rest)).internally_active
    ea_v = activities(M.restrict(V), induced_ordering(order, V),
                      compress(B1, V)).externally_active
    ia_rest, ea_v = expand(ia_rest, rest), expand(ea_v, V)
    if ia_rest != whole.internally_active or ea_v != whole.externally_active:
        raise ActivityTransferViolation(f"activities of basis {elements(B)} do not transfer")
    return BasisDecomposition(B, B1, B2, V, whole.internally_active,
                              whole.externally_active, ia_rest, ea_v)


def all_orderings_sample(n: int, count: int, rng: np.random.Generator) -> list[list[int]]:
    """``count`` distinct orderings (all of them when n! <= count), identity first."""
    if n <= 1:
        return [list(range(n))]
    out = [list(range(n))]
    seen = {tuple(out[0])}
    total = 1
    for k in range(2, n + 1):
        total *= k
    if total <= count:
        return [list(p) for p in itertools.permutations(range(n))]
    while len(out) < count:
        p = tuple(int(v) for v in rng.permutation(n))
        if p not in seen:
            seen.add(p)
            out.append(list(p))
    return out
