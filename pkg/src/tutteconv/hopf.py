"""Free abelian group on matroid isomorphism classes, with its
coproduct, direct-sum product, counit, duality involution and bigrading.

Classes are canonical rank tables, so everything here is limited by the
brute-force canonical form (n <= 9).
"""

from __future__ import annotations

import functools
import itertools
from collections.abc import Mapping
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Union

import numpy as np

from . import convolution as conv
from .errors import SizeExceeded
from .matroid import MAX_CANONICAL, Matroid, direct_sum
from .poly import X, Y

COPRODUCT_CAP = 8
COASSOCIATIVITY_CAP = 7
TUTTE_FUNCTIONAL_CAP = 12


@dataclass(frozen=True)
class IsoClass:
    n: int
    table: bytes

    @property
    def bidegree(self) -> tuple[int, int]:
        r = self.table[-1]
        return r, self.n - r

    def matroid(self) -> Matroid:
        t = np.frombuffer(self.table, dtype=np.uint8)
        return Matroid(self.n, t, backend="class", validate=False)

    def __repr__(self) -> str:
        return f"[n={self.n} bideg={self.bidegree} #{self.table.hex()[:12]}]"


def iso_class(M: Matroid) -> IsoClass:
    return IsoClass(*M.canonical_form())


class FormalSum(Mapping):
    """Finite integer combination of hashable basis elements; zeros are dropped."""

    __slots__ = ("_c",)

    def __init__(self, items: Mapping | Iterable[tuple[Hashable, int]] | None = None):
        c: dict = {}
        if items is not None:
            pairs = items.items() if isinstance(items, Mapping) else items
            for k, v in pairs:
                c[k] = c.get(k, 0) + int(v)
        self._c = {k: v for k, v in c.items() if v}

    @classmethod
    def of(cls, key: Hashable, coeff: int = 1) -> "FormalSum":
        return cls([(key, coeff)])

    def __getitem__(self, key):
        return self._c.get(key, 0)

    def __iter__(self) -> Iterator:
        return iter(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def __contains__(self, key) -> bool:
        return key in self._c

    def __add__(self, other: "FormalSum") -> "FormalSum":
        return type(self)(itertools.chain(self._c.items(), other.items()))

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + other.scale(-1)

    def scale(self, k: int) -> "FormalSum":
        return type(self)((key, k * v) for key, v in self._c.items())

    __rmul__ = scale

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FormalSum):
            return self._c == other._c
        if isinstance(other, Mapping):
            return self._c == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self._c!r})"


class TensorSum(FormalSum):
    """Combination of tuples of classes (pairs for A (x) A, triples for A (x) A (x) A)."""


ClassLike = Union[Matroid, IsoClass]


def _as_class(m: ClassLike) -> IsoClass:
    return m if isinstance(m, IsoClass) else iso_class(m)


def as_sum(m: Union[ClassLike, FormalSum]) -> FormalSum:
    if isinstance(m, FormalSum):
        return m
    return FormalSum.of(_as_class(m))


# ---------------------------------------------------------------------------
# structure maps


def coproduct(M: ClassLike) -> TensorSum:
    """sum over A of [M|A] (x) [M/A]."""
    _require(M, COPRODUCT_CAP, "coproduct")
    return _coproduct_class(_as_class(M))


@functools.lru_cache(maxsize=None)
def _coproduct_class(c: IsoClass) -> TensorSum:
    if c.n > COPRODUCT_CAP:
        raise SizeExceeded(f"coproduct needs n <= {COPRODUCT_CAP}, got {c.n}")
    M = c.matroid()
    counts: dict[tuple[IsoClass, IsoClass], int] = {}
    for A in range(1 << M.n):
        key = (iso_class(M.restrict(A)), iso_class(M.contract(A)))
        counts[key] = counts.get(key, 0) + 1
    return TensorSum(counts)


def coproduct_sum(s: FormalSum) -> TensorSum:
    out: dict = {}
    for c, k in s.items():
        for pair, v in coproduct(c).items():
            out[pair] = out.get(pair, 0) + k * v
    return TensorSum(out)


def product(p: ClassLike, q: ClassLike) -> IsoClass:
    """[M] [M'] = [M (+) M']."""
    p, q = _as_class(p), _as_class(q)
    if p.n + q.n > MAX_CANONICAL:
        raise SizeExceeded(f"product needs combined size <= {MAX_CANONICAL}")
    return iso_class(direct_sum(p.matroid(), q.matroid()))


def product_sum(s: FormalSum, t: FormalSum) -> FormalSum:
    return FormalSum((product(p, q), a * b) for p, a in s.items() for q, b in t.items())


def unit() -> IsoClass:
    return IsoClass(0, bytes([0]))


def counit(s: Union[ClassLike, FormalSum]) -> int:
    return as_sum(s)[unit()]


def phi_class(c: ClassLike) -> IsoClass:
    return iso_class(_as_class(c).matroid().dual())


def phi(s: Union[ClassLike, FormalSum]) -> FormalSum:
    return FormalSum((phi_class(c), k) for c, k in as_sum(s).items())


def phi_tensor(t: TensorSum) -> TensorSum:
    return TensorSum((tuple(phi_class(c) for c in key), k) for key, k in t.items())


def opposite(t: TensorSum) -> TensorSum:
    """Swap the two tensor factors."""
    return TensorSum(((b, a), k) for (a, b), k in t.items())


def bidegree(s: Union[ClassLike, FormalSum]) -> tuple[int, int] | None:
    """Common bidegree of a bihomogeneous element; None for zero or mixed sums."""
    degs = {c.bidegree for c in as_sum(s)}
    return degs.pop() if len(degs) == 1 else None


# ---------------------------------------------------------------------------
# axiom checks


def _require(M: ClassLike, cap: int, what: str) -> None:
    if _n(M) > cap:
        raise SizeExceeded(f"{what} needs n <= {cap}, got {_n(M)}")


def _n(M: ClassLike) -> int:
    return M.n


def check_coassociativity(M: ClassLike) -> bool:
    """(Delta (x) id) Delta [M] == (id (x) Delta) Delta [M]."""
    _require(M, COASSOCIATIVITY_CAP, "coassociativity check")
    left: dict = {}
    right: dict = {}
    for (p, q), k in coproduct(M).items():
        for (p1, p2), v in coproduct(p).items():
            key = (p1, p2, q)
            left[key] = left.get(key, 0) + k * v
        for (q1, q2), v in coproduct(q).items():
            key = (p, q1, q2)
            right[key] = right.get(key, 0) + k * v
    return TensorSum(left) == TensorSum(right)


def check_counit(M: ClassLike) -> bool:
    """(eps (x) id) Delta [M] == [M] == (id (x) eps) Delta [M]."""
    _require(M, COASSOCIATIVITY_CAP, "counit check")
    e = unit()
    d = coproduct(M)
    left = FormalSum((q, k) for (p, q), k in d.items() if p == e)
    right = FormalSum((p, k) for (p, q), k in d.items() if q == e)
    target = as_sum(M)
    return left == target and right == target


def check_bidegree_additivity(M: ClassLike) -> bool:
    s, t = _as_class(M).bidegree
    return all(p.bidegree[0] + q.bidegree[0] == s and p.bidegree[1] + q.bidegree[1] == t
               for p, q in coproduct(M))


def check_phi_involution(s: Union[ClassLike, FormalSum]) -> bool:
    """phi(phi(s)) == s, and phi swaps the bidegree of every class."""
    s = as_sum(s)
    if phi(phi(s)) != s:
        return False
    return all(phi_class(c).bidegree == c.bidegree[::-1] for c in s)


def check_phi_compatibility(M: ClassLike) -> bool:
    """Delta(phi [M]) == (phi (x) phi) Delta^op [M]."""
    _require(M, COPRODUCT_CAP, "duality compatibility check")
    c = _as_class(M)
    return coproduct(phi_class(c)) == phi_tensor(opposite(coproduct(c)))


def check_connected(classes: Iterable[IsoClass]) -> bool:
    """Only the empty matroid sits in bidegree (0, 0)."""
    return all((c == unit()) == (c.bidegree == (0, 0)) for c in classes)


def check_product_laws(classes: Iterable[IsoClass]) -> bool:
    """Commutativity, associativity and unit law of the direct-sum product."""
    classes = list(classes)
    e = unit()
    for p in classes:
        if product(p, e) != p or product(e, p) != p:
            return False
    for p, q in itertools.combinations_with_replacement(classes, 2):
        if p.n + q.n <= MAX_CANONICAL and product(p, q) != product(q, p):
            return False
    for p, q, r in itertools.product(classes, repeat=3):
        if p.n + q.n + r.n <= MAX_CANONICAL:
            if product(product(p, q), r) != product(p, product(q, r)):
                return False
    return True


def check_tutte_functional(M: Matroid) -> bool:
    """The bidegree-built Tutte functional swaps x, y under duality and
    factors as T(0, y) o T(x, 0)."""
    if M.n > TUTTE_FUNCTIONAL_CAP:
        raise SizeExceeded(f"Tutte functional check needs n <= {TUTTE_FUNCTIONAL_CAP}, got {M.n}")
    T = conv.tutte_functional()
    value = T(M)
    if T(M.dual()) != value.swap_xy():
        return False
    factored = conv.convolve(conv.tutte_functional(0, Y), conv.tutte_functional(X, 0))
    return factored.evaluate(M) == value
