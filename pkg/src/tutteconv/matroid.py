"""Matroids on the ground set 0..n-1, stored as a full rank table.

Subsets are int bitmasks; element ``i`` belongs to ``A`` iff bit ``i`` is set.
Every construction path materialises all ``2**n`` ranks once, after which
rank queries, minors and duals are array lookups.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import InvalidSpec, OverlappingSets, SizeExceeded

MAX_ELEMENTS = 24
MAX_CANONICAL = 9
_EXHAUSTIVE_CHECK = 12
_SPOT_CHECKS = 10_000


# ---------------------------------------------------------------------------
# descriptions


@dataclass(frozen=True)
class UniformSpec:
    rank: int
    size: int


@dataclass(frozen=True)
class GraphicSpec:
    vertices: int
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class GF2Spec:
    """Binary matrix given as rows; column ``j`` is element ``j``."""

    matrix: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class BasesSpec:
    size: int
    bases: tuple[tuple[int, ...], ...]


MatroidSpec = Union[UniformSpec, GraphicSpec, GF2Spec, BasesSpec]


# ---------------------------------------------------------------------------
# bit helpers


@functools.lru_cache(maxsize=None)
def popcounts(n: int) -> np.ndarray:
    """Read-only array of popcounts of 0 .. 2**n - 1."""
    pc = np.zeros(1 << n, dtype=np.uint8)
    for i in range(n):
        pc[1 << i: 2 << i] = pc[: 1 << i] + 1
    pc.setflags(write=False)
    return pc


def elements(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def to_mask(items: Iterable[int]) -> int:
    m = 0
    for i in items:
        m |= 1 << int(i)
    return m


def submasks(mask: int) -> np.ndarray:
    """All submasks of ``mask``; entry ``j`` spreads the bits of ``j`` onto ``mask``."""
    out = np.zeros(1, dtype=np.int64)
    for e in elements(mask):
        out = np.concatenate([out, out | (1 << e)])
    return out


def compress(mask: int, kept: int) -> int:
    """Re-index ``mask & kept`` onto 0..|kept|-1, preserving element order."""
    out = 0
    j = 0
    for e in elements(kept):
        if mask >> e & 1:
            out |= 1 << j
        j += 1
    return out


def expand(local: int, kept: int) -> int:
    """Inverse of :func:`compress`."""
    out = 0
    for j, e in enumerate(elements(kept)):
        if local >> j & 1:
            out |= 1 << e
    return out


# ---------------------------------------------------------------------------
# rank axioms


def check_rank_axioms(n: int, table: np.ndarray, rng: np.random.Generator | None = None) -> None:
    """Raise InvalidSpec unless ``table`` is a matroid rank function.

    Up to 12 elements the check is exhaustive: normalisation, unit increase
    for every (A, e) and local submodularity r(A+e)+r(A+f) >= r(A+e+f)+r(A),
    which together imply full submodularity.  Larger ground sets get unit
    increase exhaustively and submodularity on random pairs.
    """
    t = table.astype(np.int16)
    if t[0] != 0:
        raise InvalidSpec("rank of the empty set is not 0")
    N = 1 << n
    idx = np.arange(N, dtype=np.int64)
    for e in range(n):
        lacking = idx[(idx >> e & 1) == 0]
        d = t[lacking | (1 << e)] - t[lacking]
        if ((d < 0) | (d > 1)).any():
            raise InvalidSpec(f"adding element {e} changes rank by more than one")
    if n <= _EXHAUSTIVE_CHECK:
        for e, f in itertools.combinations(range(n), 2):
            base = idx[((idx >> e) & 1 | (idx >> f) & 1) == 0]
            be, bf = 1 << e, 1 << f
            if (t[base | be] + t[base | bf] < t[base | be | bf] + t[base]).any():
                raise InvalidSpec("rank function is not submodular")
    else:
        rng = rng or np.random.default_rng(0)
        a = rng.integers(0, N, _SPOT_CHECKS)
        b = rng.integers(0, N, _SPOT_CHECKS)
        if (t[a | b] + t[a & b] > t[a] + t[b]).any():
            raise InvalidSpec("rank function is not submodular")


# ---------------------------------------------------------------------------
# the matroid type


class Matroid:
    """Immutable matroid given by its rank table."""

    __slots__ = ("n", "_rank", "backend", "spec", "_key")

    def __init__(self, n: int, rank_table, *, backend: str = "table",
                 spec: MatroidSpec | None = None, validate: bool = True):
        if n > MAX_ELEMENTS:
            raise SizeExceeded(f"{n} elements (limit {MAX_ELEMENTS})")
        table = np.asarray(rank_table)
        if table.shape != (1 << n,):
            raise InvalidSpec(f"rank table needs {1 << n} entries, got {table.shape}")
        if table.dtype != np.uint8:
            if (table < 0).any() or (table > n).any():
                raise InvalidSpec("rank values out of range")
            table = table.astype(np.uint8)
        if validate:
            check_rank_axioms(n, table)
        if table.flags.writeable:
            table = table.copy()
            table.setflags(write=False)
        self.n = n
        self._rank = table
        self.backend = backend
        self.spec = spec
        self._key = None

    # -- basic queries ----------------------------------------------------

    @property
    def rank_table(self) -> np.ndarray:
        return self._rank

    @property
    def ground(self) -> int:
        return (1 << self.n) - 1

    @property
    def full_rank(self) -> int:
        return int(self._rank[-1])

    @property
    def corank(self) -> int:
        """Rank of the dual, |E| - r(E)."""
        return self.n - self.full_rank

    @property
    def bidegree(self) -> tuple[int, int]:
        return self.full_rank, self.corank

    def rank(self, A: int) -> int:
        if A >> self.n:
            raise ValueError(f"mask {A:#x} outside a ground set of {self.n} elements")
        return int(self._rank[A])

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._rank, other._rank)

    def __hash__(self) -> int:
        return hash((self.n, self._rank.tobytes()))

    def __repr__(self) -> str:
        return f"Matroid(n={self.n}, rank={self.full_rank}, backend={self.backend!r})"

    # -- derived matroids -------------------------------------------------

    def dual(self) -> "Matroid":
        idx = np.arange(1 << self.n, dtype=np.int64)
        t = (popcounts(self.n).astype(np.int16) + self._rank[self.ground ^ idx]
             - self.full_rank)
        return Matroid(self.n, t.astype(np.uint8), backend="dual", validate=False)

    def minor(self, contract: int = 0, delete: int = 0) -> "Matroid":
        """Contract ``contract`` and delete ``delete``; survivors keep their relative order."""
        if contract & delete:
            raise OverlappingSets("contracted and deleted sets intersect")
        if (contract | delete) >> self.n:
            raise ValueError("mask outside the ground set")
        kept = self.ground & ~(contract | delete)
        idx = submasks(kept)
        t = self._rank[idx | contract].astype(np.int16) - int(self._rank[contract])
        return Matroid(len(idx).bit_length() - 1, t.astype(np.uint8),
                       backend="minor", validate=False)

    def restrict(self, A: int) -> "Matroid":
        return self.minor(0, self.ground & ~A)

    def contract(self, A: int) -> "Matroid":
        return self.minor(A, 0)

    def delete(self, A: int) -> "Matroid":
        return self.minor(0, A)

    # -- closure, flats, special elements --------------------------------

    def closure(self, A: int) -> int:
        r = self.rank(A)
        cl = A
        for e in range(self.n):
            if not A >> e & 1 and self._rank[A | (1 << e)] == r:
                cl |= 1 << e
        return cl

    def is_flat(self, A: int) -> bool:
        return self.closure(A) == A

    def closures(self) -> np.ndarray:
        """Closure of every subset, indexed by mask."""
        idx = np.arange(1 << self.n, dtype=np.int64)
        cl = idx.copy()
        r = self._rank
        for e in range(self.n):
            bit = 1 << e
            cl |= np.where(r[idx | bit] == r, bit, 0)
        return cl

    def isthmuses_of_restrictions(self, masks: np.ndarray) -> np.ndarray:
        """For each A, the elements e of A with r(A - e) < r(A)."""
        masks = np.asarray(masks, dtype=np.int64)
        out = np.zeros_like(masks)
        r = self._rank
        for e in range(self.n):
            bit = 1 << e
            hit = (masks & bit != 0) & (r[masks & ~bit] < r[masks])
            out |= np.where(hit, bit, 0)
        return out

    def flats(self, isthmus_free_only: bool = False) -> list[int]:
        idx = np.arange(1 << self.n, dtype=np.int64)
        flats = idx[self.closures() == idx]
        if isthmus_free_only:
            flats = flats[self.isthmuses_of_restrictions(flats) == 0]
        return [int(f) for f in flats]

    def loops_and_isthmuses(self) -> tuple[int, int]:
        loops = isthmuses = 0
        r = self.full_rank
        for e in range(self.n):
            bit = 1 << e
            if self._rank[bit] == 0:
                loops |= bit
            if self._rank[self.ground ^ bit] == r - 1:
                isthmuses |= bit
        return loops, isthmuses

    def basis_indicator(self) -> np.ndarray:
        r = self.full_rank
        return (self._rank == r) & (popcounts(self.n) == r)

    def bases(self) -> list[int]:
        return [int(b) for b in np.nonzero(self.basis_indicator())[0]]

    def is_basis(self, B: int) -> bool:
        return not B >> self.n and bin(B).count("1") == self.full_rank == self._rank[B]

    def independent_count(self) -> int:
        return int(np.count_nonzero(self._rank == popcounts(self.n)))

    def spanning_count(self) -> int:
        return int(np.count_nonzero(self._rank == self.full_rank))

    # -- isomorphism ------------------------------------------------------

    def canonical_form(self) -> tuple[int, bytes]:
        """Lexicographically least rank table over all relabelings (n <= 9)."""
        if self._key is None:
            if self.n > MAX_CANONICAL:
                raise SizeExceeded(f"canonical form needs n <= {MAX_CANONICAL}, got {self.n}")
            self._key = _canonical(self.n, self._rank.tobytes())
        return self._key

    def is_isomorphic(self, other: "Matroid") -> bool:
        return self.canonical_form() == other.canonical_form()


_CANON_CHUNK = 1 << 22


@functools.lru_cache(maxsize=1 << 16)
def _canonical(n: int, table_bytes: bytes) -> tuple[int, bytes]:
    """Lex-least relabeled table, built one bit position at a time.

    Columns [2^k, 2^(k+1)) of a relabeled table depend only on which elements
    sit at positions 0..k, so a prefix that is not lex-minimal can never be
    completed to the minimum and is dropped.
    """
    table = np.frombuffer(table_bytes, dtype=np.uint8)
    if n <= 1:
        return n, table_bytes
    perms = np.zeros((1, 0), dtype=np.int8)    # elements at positions 0..k-1
    images = np.zeros((1, 1), dtype=np.int32)  # images of masks 0..2^k-1
    for k in range(n):
        width = 1 << k
        best_row = None
        kept_perms, kept_images = [], []
        step = max(1, _CANON_CHUNK // (width * (n - k)))
        for lo in range(0, len(perms), step):
            P, I = perms[lo:lo + step], images[lo:lo + step]
            used = np.zeros((len(P), n), dtype=bool)
            np.put_along_axis(used, P.astype(np.int64), True, axis=1)
            rows, elems = np.nonzero(~used)
            new_images = I[rows] | (np.int32(1) << elems.astype(np.int32))[:, None]
            vals = table[new_images]
            cand = np.arange(len(rows))
            for col in range(width):
                v = vals[cand, col]
                cand = cand[v == v.min()]
                if len(cand) == 1:
                    break
            row = vals[cand[0]].tobytes()
            if best_row is not None and row > best_row:
                continue
            if best_row is None or row < best_row:
                best_row, kept_perms, kept_images = row, [], []
            kept_perms.append(np.hstack([P[rows[cand]], elems[cand, None].astype(np.int8)]))
            kept_images.append(np.hstack([I[rows[cand]], new_images[cand]]))
        perms = np.vstack(kept_perms)
        images = np.vstack(kept_images)
    return n, table[images[0]].tobytes()


# ---------------------------------------------------------------------------
# construction


def _check_size(n: int) -> None:
    if n < 0:
        raise InvalidSpec("negative element count")
    if n > MAX_ELEMENTS:
        raise SizeExceeded(f"{n} elements (limit {MAX_ELEMENTS})")


def uniform(rank: int, size: int) -> Matroid:
    _check_size(size)
    if not 0 <= rank <= size:
        raise InvalidSpec(f"uniform matroid needs 0 <= r <= n, got r={rank}, n={size}")
    t = np.minimum(popcounts(size), rank).astype(np.uint8)
    return Matroid(size, t, backend="uniform", spec=UniformSpec(rank, size))


def _independent_rows(rows: Iterable[int]) -> list[int]:
    basis: list[int] = []  # kept in decreasing order, distinct leading bits
    for row in rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
            basis.sort(reverse=True)
    return basis


def _gf2_rank_table(columns: Sequence[int], n: int) -> np.ndarray:
    """Ranks of all column subsets; ``columns`` are ints holding d-bit vectors, d <= 32."""
    d = max((c.bit_length() for c in columns), default=0)
    k = min(n, 16)
    low_cols = [np.uint32(c) for c in columns[:k]]
    high_cols = list(columns[k:])
    table = np.empty(1 << n, dtype=np.uint8)
    L = 1 << k
    for h in range(1 << (n - k)):
        # echelon basis of the high part: pivot p holds a vector with lowest bit p
        piv = [0] * max(d, 1)
        base_rank = 0
        for j, c in enumerate(high_cols):
            if h >> j & 1:
                v = c
                while v:
                    p = (v & -v).bit_length() - 1
                    if piv[p]:
                        v ^= piv[p]
                    else:
                        piv[p] = v
                        base_rank += 1
                        break
        P = np.zeros((L, max(d, 1)), dtype=np.uint32)
        P[0] = piv
        R = np.zeros(L, dtype=np.uint8)
        R[0] = base_rank
        for j, col in enumerate(low_cols):
            lo = 1 << j
            src = P[:lo]
            v = np.full(lo, col, dtype=np.uint32)
            for p in range(d):
                pv = src[:, p]
                hit = ((v >> np.uint32(p)) & np.uint32(1)).astype(bool) & (pv != 0)
                v = np.where(hit, v ^ pv, v)
            P[lo:2 * lo] = src
            nz = v != 0
            R[lo:2 * lo] = R[:lo] + nz
            if nz.any():
                vnz = v[nz]
                low = vnz & (~vnz + np.uint32(1))
                pos = np.log2(low.astype(np.float64)).astype(np.int64)
                P[np.nonzero(nz)[0] + lo, pos] = vnz
        table[h * L:(h + 1) * L] = R
    return table


def _columns_from_rows(rows: Sequence[int], n: int) -> list[int]:
    """Re-express column vectors in coordinates of an independent row basis."""
    basis = _independent_rows(rows)
    cols = []
    for j in range(n):
        c = 0
        for i, row in enumerate(basis):
            if row >> j & 1:
                c |= 1 << i
        cols.append(c)
    return cols


def gf2(matrix: Sequence[Sequence[int]]) -> Matroid:
    rows = [tuple(int(v) for v in row) for row in matrix]
    n = len(rows[0]) if rows else 0
    if any(len(r) != n for r in rows):
        raise InvalidSpec("matrix rows have different lengths")
    if any(v not in (0, 1) for r in rows for v in r):
        raise InvalidSpec("matrix entries must be 0 or 1")
    _check_size(n)
    row_ints = [to_mask(j for j, v in enumerate(r) if v) for r in rows]
    table = _gf2_rank_table(_columns_from_rows(row_ints, n), n)
    return Matroid(n, table, backend="gf2", spec=GF2Spec(tuple(rows)))


def graphic(vertices: int, edges: Sequence[Sequence[int]]) -> Matroid:
    """Cycle matroid of a multigraph; loops and parallel edges allowed.

    Uses the GF(2) vertex-edge incidence matrix, whose column matroid is the
    graphic matroid.
    """
    edges = [tuple(int(v) for v in e) for e in edges]
    if vertices < 0:
        raise InvalidSpec("negative vertex count")
    for e in edges:
        if len(e) != 2 or not all(0 <= v < vertices for v in e):
            raise InvalidSpec(f"bad edge {e} for {vertices} vertices")
    n = len(edges)
    _check_size(n)
    rows = [0] * vertices
    for j, (u, v) in enumerate(edges):
        if u != v:
            rows[u] |= 1 << j
            rows[v] |= 1 << j
    table = _gf2_rank_table(_columns_from_rows(rows, n), n)
    return Matroid(n, table, backend="graphic", spec=GraphicSpec(vertices, tuple(edges)))


def from_bases(size: int, bases: Sequence[Iterable[int]]) -> Matroid:
    _check_size(size)
    bases = [tuple(sorted(int(e) for e in b)) for b in bases]
    if not bases:
        raise InvalidSpec("bases list is empty")
    masks = []
    for b in bases:
        if len(set(b)) != len(b) or any(not 0 <= e < size for e in b):
            raise InvalidSpec(f"malformed basis {list(b)}")
        masks.append(to_mask(b))
    if len(set(masks)) != len(masks):
        raise InvalidSpec("duplicate basis")
    r = len(bases[0])
    if any(len(b) != r for b in bases):
        raise InvalidSpec("bases have different sizes")
    present = set(masks)
    for b1 in masks:
        for b2 in masks:
            for e in elements(b1 & ~b2):
                if not any((b1 ^ (1 << e)) | (1 << f) in present for f in elements(b2 & ~b1)):
                    raise InvalidSpec("basis exchange fails")
    pc = popcounts(size)
    idx = np.arange(1 << size, dtype=np.int64)
    t = np.zeros(1 << size, dtype=np.uint8)
    for b in masks:
        np.maximum(t, pc[idx & b], out=t)
    spec = BasesSpec(size, tuple(bases))
    return Matroid(size, t, backend="bases", spec=spec)


def build(spec: MatroidSpec) -> Matroid:
    if isinstance(spec, UniformSpec):
        return uniform(spec.rank, spec.size)
    if isinstance(spec, GraphicSpec):
        return graphic(spec.vertices, spec.edges)
    if isinstance(spec, GF2Spec):
        return gf2(spec.matrix)
    if isinstance(spec, BasesSpec):
        return from_bases(spec.size, spec.bases)
    raise InvalidSpec(f"unknown matroid description {spec!r}")


def direct_sum(m1: Matroid, m2: Matroid) -> Matroid:
    """Elements of ``m2`` are relabelled to n1 .. n1+n2-1."""
    n = m1.n + m2.n
    _check_size(n)
    idx = np.arange(1 << n, dtype=np.int64)
    t = m1.rank_table[idx & m1.ground] + m2.rank_table[idx >> m1.n]
    return Matroid(n, t.astype(np.uint8), backend="sum", validate=False)


def empty() -> Matroid:
    return uniform(0, 0)


def loop() -> Matroid:
    return uniform(0, 1)


def isthmus() -> Matroid:
    return uniform(1, 1)
