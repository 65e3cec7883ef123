"""Sparse polynomials in x, y, z, w with exact integer coefficients.

Monomials are packed into a single Python int, 16 bits per exponent, so that
multiplying two monomials is one integer addition.  Exponents therefore must
stay below 2**16; everything in this package is bounded by the ground-set
size (at most 24).
"""

from __future__ import annotations

from typing import Iterable, Mapping, Union

from .errors import UnboundVariable

VARIABLES = ("x", "y", "z", "w")
_BITS = 16
_FIELD = (1 << _BITS) - 1
_MAX_EXP = _FIELD

Exponents = tuple[int, int, int, int]
PolyLike = Union["Poly", int]


def _pack(exps: Iterable[int]) -> int:
    key = 0
    for i, e in enumerate(exps):
        if e < 0 or e > _MAX_EXP:
            raise ValueError(f"exponent {e} out of range")
        key |= e << (_BITS * i)
    return key


def _unpack(key: int) -> Exponents:
    return (
        key & _FIELD,
        (key >> _BITS) & _FIELD,
        (key >> 2 * _BITS) & _FIELD,
        (key >> 3 * _BITS) & _FIELD,
    )


class Poly:
    """Immutable polynomial; ``terms`` maps exponent quadruples to coefficients."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[Exponents, int] | None = None):
        t: dict[int, int] = {}
        if terms:
            for exps, c in terms.items():
                if len(exps) != 4:
                    raise ValueError("exponent vectors have four entries")
                c = int(c)
                if c:
                    k = _pack(exps)
                    v = t.get(k, 0) + c
                    if v:
                        t[k] = v
                    else:
                        del t[k]
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, t: dict[int, int]) -> "Poly":
        p = cls.__new__(cls)
        p._t = t
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls._raw({0: int(c)} if c else {})

    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls.monomial(**{name: 1})

    @classmethod
    def monomial(cls, coeff: int = 1, *, x: int = 0, y: int = 0, z: int = 0,
                 w: int = 0) -> "Poly":
        if not coeff:
            return cls._raw({})
        return cls._raw({_pack((x, y, z, w)): int(coeff)})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[Exponents, int]:
        return {_unpack(k): c for k, c in self._t.items()}

    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def coefficient(self, x: int = 0, y: int = 0, z: int = 0, w: int = 0) -> int:
        return self._t.get(_pack((x, y, z, w)), 0)

    def degree(self, var: str | None = None) -> int:
        """Total degree, or the degree in one variable; -1 for the zero polynomial."""
        if not self._t:
            return -1
        if var is None:
            return max(sum(_unpack(k)) for k in self._t)
        i = VARIABLES.index(var)
        return max(_unpack(k)[i] for k in self._t)

    def variables(self) -> set[str]:
        used = set()
        for k in self._t:
            for name, e in zip(VARIABLES, _unpack(k)):
                if e:
                    used.add(name)
        return used

    # -- ring operations --------------------------------------------------

    @staticmethod
    def _coerce(other: PolyLike) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.const(other)
        return NotImplemented

    def __add__(self, other: PolyLike) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if len(other._t) > len(self._t):
            a, b = other._t, self._t
        else:
            a, b = self._t, other._t
        t = dict(a)
        for k, c in b.items():
            v = t.get(k, 0) + c
            if v:
                t[k] = v
            else:
                del t[k]
        return Poly._raw(t)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw({k: -c for k, c in self._t.items()})

    def __sub__(self, other: PolyLike) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: PolyLike) -> "Poly":
        return (-self) + other

    def __mul__(self, other: PolyLike) -> "Poly":
        if isinstance(other, int):
            if not other:
                return Poly._raw({})
            return Poly._raw({k: c * other for k, c in self._t.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            ((kb, cb),) = b.items()
            return Poly._raw({k + kb: c * cb for k, c in a.items()})
        t: dict[int, int] = {}
        get = t.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                t[k] = get(k, 0) + ca * cb
        return Poly._raw({k: c for k, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._t == other._t

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    # -- evaluation and substitution -------------------------------------

    def evaluate(self, at: Mapping[str, int] | None = None, **kw: int) -> int:
        """Exact integer value; every variable occurring in the polynomial must be bound."""
        values = dict(at or {}, **kw)
        total = 0
        for k, c in self._t.items():
            term = c
            for name, e in zip(VARIABLES, _unpack(k)):
                if e:
                    if name not in values:
                        raise UnboundVariable(name)
                    term *= int(values[name]) ** e
            total += term
        return total

    def subst(self, bindings: Mapping[str, PolyLike] | None = None,
              **kw: PolyLike) -> "Poly":
        """Substitute polynomials (or integers) for any subset of the variables."""
        b = {name: self._coerce(v) for name, v in dict(bindings or {}, **kw).items()}
        for name in b:
            if name not in VARIABLES:
                raise ValueError(f"unknown variable {name!r}")
        if not b:
            return self
        powers: dict[tuple[str, int], Poly] = {}

        def power(name: str, e: int) -> Poly:
            key = (name, e)
            if key not in powers:
                powers[key] = b[name] ** e
            return powers[key]

        total = Poly._raw({})
        for k, c in self._t.items():
            exps = _unpack(k)
            kept = [0, 0, 0, 0]
            term = Poly.const(c)
            for i, (name, e) in enumerate(zip(VARIABLES, exps)):
                if not e:
                    continue
                if name in b:
                    term = term * power(name, e)
                else:
                    kept[i] = e
            total = total + term * Poly._raw({_pack(kept): 1})
        return total

    def swap_xy(self) -> "Poly":
        t = {}
        for k, c in self._t.items():
            ex, ey, ez, ew = _unpack(k)
            t[_pack((ey, ex, ez, ew))] = c
        return Poly._raw(t)

    # -- printing ---------------------------------------------------------

    def __str__(self) -> str:
        if not self._t:
            return "0"
        items = sorted(
            ((_unpack(k), c) for k, c in self._t.items()),
            key=lambda kc: (sum(kc[0]), kc[0]),
            reverse=True,
        )
        out = []
        for i, (exps, c) in enumerate(items):
            factors = []
            for name, e in zip(VARIABLES, exps):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"


X = Poly.var("x")
Y = Poly.var("y")
Z = Poly.var("z")
W = Poly.var("w")
ONE = Poly.const(1)
ZERO = Poly.const(0)
