"""Functionals on matroids and their convolution product.

A functional sends a matroid to a :class:`Poly`.  The convolution is

    (f o g)(M) = sum over A of f(M|A) g(M/A)

Evaluation happens against one root matroid: every minor that shows up is
``(kept, contracted)``, a pair of masks of the root, with rank function
r'(B) = r(B | contracted) - r(contracted).  Restricting such a minor to A
gives ``(A, contracted)``; contracting A gives ``(kept - A, contracted | A)``.
Values are memoised per evaluation on that pair.
"""

from __future__ import annotations

from typing import Hashable

from .engines import corank_nullity_counts, poly_from_shifted_counts
from .errors import SizeExceeded
from .matroid import Matroid
from .poly import ONE, ZERO, Poly, PolyLike, W, X, Y, Z

MAX_SINGLE = 16


def _as_poly(value: PolyLike) -> Poly:
    return value if isinstance(value, Poly) else Poly.const(value)


class _Evaluation:
    __slots__ = ("root", "rank", "memo")

    def __init__(self, root: Matroid):
        self.root = root
        self.rank = root.rank_table.tolist()
        self.memo: dict[tuple[Hashable, int, int], Poly] = {}

    def value(self, f: "Functional", kept: int, contracted: int) -> Poly:
        key = (id(f), kept, contracted)
        v = self.memo.get(key)
        if v is None:
            v = f._value(self, kept, contracted)
            self.memo[key] = v
        return v

    def minor_rank(self, kept: int, contracted: int) -> int:
        return self.rank[kept | contracted] - self.rank[contracted]


class Functional:
    """Base class; subclasses implement ``_value`` on a (kept, contracted) minor."""

    max_n = MAX_SINGLE

    def __call__(self, M: Matroid) -> Poly:
        if M.n > self.max_n:
            raise SizeExceeded(f"evaluating {self!r} needs n <= {self.max_n}, got {M.n}")
        return self.evaluate(M)

    def evaluate(self, M: Matroid) -> Poly:
        """Evaluate on M without the size guard."""
        return _Evaluation(M).value(self, M.ground, 0)

    def _value(self, ev: _Evaluation, kept: int, contracted: int) -> Poly:
        raise NotImplementedError

    def __matmul__(self, other: "Functional") -> "Functional":
        return convolve(self, other)

    def depth(self) -> int:
        return 0


class Delta(Functional):
    max_n = 24

    def _value(self, ev, kept, contracted):
        return ONE if kept == 0 else ZERO

    def __repr__(self):
        return "delta()"


class Zeta(Functional):
    """M -> a^r(M) b^(|M| - r(M))."""

    max_n = 24

    def __init__(self, a: PolyLike, b: PolyLike):
        self.a = _as_poly(a)
        self.b = _as_poly(b)
        self._powers: dict[tuple[int, int], Poly] = {}

    def _value(self, ev, kept, contracted):
        r = ev.minor_rank(kept, contracted)
        k = bin(kept).count("1") - r
        p = self._powers.get((r, k))
        if p is None:
            p = self.a ** r * self.b ** k
            self._powers[(r, k)] = p
        return p

    def __repr__(self):
        return f"zeta({self.a}, {self.b})"


class TutteAt(Functional):
    """M -> T_M(xs, ys) for polynomial substitutions xs, ys (rank-sum on the minor)."""

    max_n = 20

    def __init__(self, xs: PolyLike = X, ys: PolyLike = Y):
        self.xs = _as_poly(xs)
        self.ys = _as_poly(ys)

    def _value(self, ev, kept, contracted):
        minor = ev.root.minor(contracted, ev.root.ground & ~(kept | contracted))
        T = poly_from_shifted_counts(corank_nullity_counts(minor))
        return T.subst(x=self.xs, y=self.ys)

    def __repr__(self):
        return f"T({self.xs}, {self.ys})"


class Convolve(Functional):
    def __init__(self, f: Functional, g: Functional):
        self.f = f
        self.g = g
        self.max_n = min(MAX_SINGLE if self.depth() <= 1 else 14, f.max_n, g.max_n)

    def depth(self) -> int:
        return 1 + max(self.f.depth(), self.g.depth())

    def _value(self, ev, kept, contracted):
        f, g = self.f, self.g
        total = ZERO
        A = kept
        while True:
            left = ev.value(f, A, contracted)
            if left:
                right = ev.value(g, kept ^ A, contracted | A)
                if right:
                    total = total + left * right
            if A == 0:
                break
            A = (A - 1) & kept
        return total

    def __repr__(self):
        return f"({self.f!r} o {self.g!r})"


def delta() -> Functional:
    return Delta()


def zeta(a: PolyLike, b: PolyLike) -> Functional:
    return Zeta(a, b)


def convolve(f: Functional, g: Functional) -> Functional:
    return Convolve(f, g)


def rho(a: PolyLike, b: PolyLike, c: PolyLike, d: PolyLike) -> Functional:
    """rho(a, b, c, d) = zeta(c, b) o zeta(a, d)."""
    return convolve(zeta(c, b), zeta(a, d))


def tutte_functional(xs: PolyLike = X, ys: PolyLike = Y) -> Functional:
    """T(xs, ys) = zeta(1, ys - 1) o zeta(xs - 1, 1), built from bidegrees alone."""
    return convolve(zeta(1, _as_poly(ys) - 1), zeta(_as_poly(xs) - 1, 1))


# ---------------------------------------------------------------------------
# identity checks


def verify_zeta_inverse(M: Matroid) -> bool:
    """zeta(x, y) o zeta(-x, -y) equals delta on M."""
    return convolve(zeta(X, Y), zeta(-X, -Y))(M) == delta()(M)


def verify_unit_zeta_inverse(M: Matroid) -> bool:
    return convolve(zeta(1, 1), zeta(-1, -1))(M) == delta()(M)


def verify_rho_factorization(M: Matroid) -> bool:
    """rho(x-1, y-1, z, w) = rho(-1, y-1, z, 1) o rho(x-1, -1, 1, w) on M."""
    if M.n > 10:
        raise SizeExceeded(f"rho factorisation check needs n <= 10, got {M.n}")
    lhs = rho(X - 1, Y - 1, Z, W)(M)
    rhs = convolve(rho(-1, Y - 1, Z, 1), rho(X - 1, -1, 1, W)).evaluate(M)
    return lhs == rhs


def rho_specializations_hold(M: Matroid, T: Poly) -> bool:
    return (rho(X - 1, Y - 1, 1, 1)(M) == T
            and rho(-1, Y - 1, 1, 1)(M) == T.subst(x=0)
            and rho(X - 1, -1, 1, 1)(M) == T.subst(y=0))


def verify_recursion_functional(M: Matroid) -> bool:
    """zeta(-1, -y) o T(x+1, y+1) equals zeta(x, 1) on M."""
    if M.n > 12:
        raise SizeExceeded(f"recursion functional check needs n <= 12, got {M.n}")
    lhs = convolve(zeta(-1, -Y), TutteAt(X + 1, Y + 1)).evaluate(M)
    return lhs == zeta(X, 1)(M)


def verify_shift_bridge(M: Matroid, T: Poly) -> bool:
    """zeta(1, y) o zeta(x, 1), shifted by x -> x-1, y -> y-1, is T."""
    return convolve(zeta(1, Y), zeta(X, 1))(M).subst(x=X - 1, y=Y - 1) == T


def verify_tutte_product(M: Matroid, T: Poly) -> bool:
    """T(0, y) o T(x, 0) equals T on M, with both factors as Tutte evaluations."""
    return convolve(TutteAt(0, Y), TutteAt(X, 0))(M) == T
