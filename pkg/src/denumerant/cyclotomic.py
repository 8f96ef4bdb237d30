"""Cyclotomic polynomials and arithmetic in Q[x]/<Phi_f> and Q[x]/<x^f - 1>.

Two representations of an element of Q[x]/<Phi_f> live here.  ``Poly``
standard forms (degree < phi(f)) are the readable currency of the wave
pipeline; :class:`CycElem` stores the same residue as an integer
numerator vector over one common denominator and is what the truncated
series arithmetic runs on, since it avoids a gcd per coefficient.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import lru_cache, reduce

from . import kernels
from .poly import Poly

_PHI_CACHE: dict[int, Poly] = {}
_PHI_LOCK = threading.RLock()


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError(f"divisors() needs a positive integer, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def divisor_union(seq) -> list[int]:
    """All divisors of all entries, ascending; always contains 1."""
    out = {1}
    for a in seq:
        out.update(divisors(a))
    return sorted(out)


def totient(n: int) -> int:
    if n < 1:
        raise ValueError(f"totient() needs a positive integer, got {n}")
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _exact_div_monic(num: list[int], den: list[int]) -> list[int]:
    # integer long division by a monic divisor, remainder must vanish
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for k in range(len(quot) - 1, -1, -1):
        c = num[k + dd]
        quot[k] = c
        if c:
            for j, dj in enumerate(den):
                if dj:
                    num[k + j] -= c * dj
    if any(num[:dd]):
        raise ArithmeticError("inexact cyclotomic division")
    return quot


def cyclotomic_poly(f: int) -> Poly:
    """Phi_f, built as (x^f - 1) divided by Phi_d for every proper divisor d."""
    if f < 1:
        raise ValueError(f"cyclotomic_poly() needs f >= 1, got {f}")
    cached = _PHI_CACHE.get(f)
    if cached is not None:
        return cached
    with _PHI_LOCK:
        if f in _PHI_CACHE:
            return _PHI_CACHE[f]
        num = [-1] + [0] * (f - 1) + [1]
        for d in divisors(f)[:-1]:
            num = _exact_div_monic(num, [int(c) for c in cyclotomic_poly(d).coeffs])
        phi = Poly(num)
        _PHI_CACHE[f] = phi
        return phi


def mod_xf_reduce(f: int, p: Poly) -> Poly:
    """Representative of p in Q[x]/<x^f - 1>: fold exponent e onto e mod f."""
    if f < 1:
        raise ValueError(f"mod_xf_reduce() needs f >= 1, got {f}")
    if p.degree < f:
        return p
    out = [Fraction(0)] * f
    for e, c in enumerate(p.coeffs):
        if c:
            out[e % f] += c
    return Poly._raw(out)


class CycRing:
    """Integer reduction data for Q[x]/<Phi_f> (Phi_f is monic with integer coefficients)."""

    __slots__ = ("f", "dim", "red", "_one", "_zero")

    def __init__(self, f: int, phi: Poly):
        self.f = f
        self.dim = phi.degree
        # x^dim = -sum(low_j x^j)
        self.red = [(j, -int(c)) for j, c in enumerate(phi.coeffs[:-1]) if c]
        self._zero = CycElem._make(self, [0] * self.dim, 1)
        self._one = CycElem._make(self, [1] + [0] * (self.dim - 1), 1)

    def zero(self) -> CycElem:
        return self._zero

    def one(self) -> CycElem:
        return self._one

    def __call__(self, value) -> CycElem:
        """Embed an int, Fraction, Poly or CycElem of this ring."""
        if isinstance(value, CycElem):
            if value.ring.f != self.f:
                raise ValueError("element of a different cyclotomic ring")
            return value
        if isinstance(value, Poly):
            return CycElem.from_poly(self, value)
        q = Fraction(value)
        num = [0] * self.dim
        num[0] = q.numerator
        return CycElem._make(self, num, q.denominator)

    def __repr__(self):
        return f"CycRing(f={self.f})"


def _normalize(num: list[int], den: int):
    g = math.gcd(den, *num)
    if g == 0:
        return num, 1
    if den < 0:
        g = -g
    if g != 1:
        num = [c // g for c in num]
        den //= g
    return num, den


class CycElem:
    """Residue class in Q[x]/<Phi_f>: sum(num[k] x^k) / den, reduced, den > 0."""

    __slots__ = ("ring", "num", "den")

    @classmethod
    def _make(cls, ring: CycRing, num: list[int], den: int) -> CycElem:
        num, den = _normalize(num, den)
        e = cls.__new__(cls)
        e.ring = ring
        e.num = tuple(num)
        e.den = den
        return e

    @classmethod
    def from_poly(cls, ring: CycRing, p: Poly) -> CycElem:
        if p.degree >= ring.dim:
            p = standard_form(get_ctx(ring.f), p)
        num, den = _common_den(p)
        return cls._make(ring, num + [0] * (ring.dim - len(num)), den)

    def to_poly(self) -> Poly:
        return Poly._raw([Fraction(c, self.den) for c in self.num])

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self):
        return any(self.num)

    def _coerce(self, other):
        if isinstance(other, CycElem):
            if other.ring.f != self.ring.f:
                raise ValueError("mixing elements of different cyclotomic rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return CycElem._make(self.ring, [a + b for a, b in zip(self.num, o.num)], self.den)
        da, db = self.den, o.den
        return CycElem._make(self.ring, [a * db + b * da for a, b in zip(self.num, o.num)], da * db)

    __radd__ = __add__

    def __neg__(self):
        e = CycElem.__new__(CycElem)
        e.ring, e.num, e.den = self.ring, tuple(-c for c in self.num), self.den
        return e

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, CycElem):
            if other.ring.f != self.ring.f:
                raise ValueError("mixing elements of different cyclotomic rings")
            ring = self.ring
            prod = kernels.mulmod(list(self.num), list(other.num), ring.red, ring.dim)
            return CycElem._make(ring, prod, self.den * other.den)
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycElem._make(self.ring, [c * q.numerator for c in self.num], self.den * q.denominator)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if not q:
                raise ZeroDivisionError("division of a cyclotomic element by zero")
            return CycElem._make(self.ring, [c * q.denominator for c in self.num], self.den * q.numerator)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported")
        result, base = self.ring.one(), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.ring.f, self.num, self.den))

    def __repr__(self):
        return f"CycElem(f={self.ring.f}, {self.to_poly().to_str('z')})"


class CycCtx:
    """Precomputed data for one modulus f."""

    def __init__(self, f: int):
        if f < 1:
            raise ValueError(f"modulus must be >= 1, got {f}")
        self.f = f
        self.phi_f = cyclotomic_poly(f)
        xf1 = Poly.monomial(f) - 1
        cof, rem = divmod(xf1, self.phi_f)
        assert rem.is_zero()
        self.cofactor = cof
        self.phi_deriv = self.phi_f.derivative()
        self.totient = self.phi_f.degree
        self.ring = CycRing(f, self.phi_f)
        self.inv_cache: dict[int, Poly] = {}
        self._inv_lock = threading.Lock()
        self._weight = None

    @property
    def residue_weight(self) -> Poly:
        """cofactor * Phi_f' reduced mod x^f - 1 (the multiplier of the final extraction)."""
        if self._weight is None:
            self._weight = mod_xf_reduce(self.f, self.cofactor * self.phi_deriv)
        return self._weight

    def weighted_residues(self, e: CycElem) -> list[Fraction]:
        """Coefficients c_0..c_{f-1} of e(x) * residue_weight(x) mod x^f - 1."""
        w = self.__dict__.get("_weight_int")
        if w is None:
            w = [int(c) for c in self.residue_weight.coeffs]
            self._weight_int = w
        prod = [0] * (len(e.num) + len(w))
        for i, a in enumerate(e.num):
            if a:
                for j, b in enumerate(w):
                    if b:
                        prod[i + j] += a * b
        return [Fraction(c, e.den) for c in fold_int(prod, self.f)]

    def __repr__(self):
        return f"CycCtx(f={self.f})"


@lru_cache(maxsize=None)
def get_ctx(f: int) -> CycCtx:
    return CycCtx(f)


def _common_den(p: Poly) -> tuple[list[int], int]:
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return [c.numerator * (den // c.denominator) for c in p.coeffs], den


def reduce_int(num: list[int], red, dim: int) -> list[int]:
    """Integer vector reduced modulo the monic x^dim - sum(c x^j for j, c in red)."""
    num = list(num)
    for k in range(len(num) - 1, dim - 1, -1):
        c = num[k]
        if c:
            base = k - dim
            for j, rj in red:
                num[base + j] += c * rj
    if len(num) < dim:
        num.extend([0] * (dim - len(num)))
    return num[:dim]


def fold_int(num: list[int], f: int) -> list[int]:
    """Integer vector folded mod x^f - 1 (length exactly f)."""
    out = [0] * f
    for e, c in enumerate(num):
        if c:
            out[e % f] += c
    return out


def standard_form(ctx: CycCtx, p: Poly) -> Poly:
    """Unique representative of degree < phi(f): reduce mod x^f - 1, then mod Phi_f."""
    if p.degree < ctx.totient:
        return p
    num, den = _common_den(p)
    num = reduce_int(fold_int(num, ctx.f), ctx.ring.red, ctx.totient)
    return Poly._raw([Fraction(c, den) for c in num])


def inverse_one_minus(ctx: CycCtx, a: int) -> Poly:
    """Standard form of 1/(1 - x^a) in Q[x]/<Phi_f>, from -(1/f) x^a theta_f'(x^a)."""
    f = ctx.f
    r = a % f
    if r == 0:
        raise ValueError(f"1 - x^{a} is not invertible modulo Phi_{f}: {f} divides {a}")
    cached = ctx.inv_cache.get(r)
    if cached is not None:
        return cached
    with ctx._inv_lock:
        if r in ctx.inv_cache:
            return ctx.inv_cache[r]
        # x^r * theta'(x^r) = sum_{i=1}^{f-1} i x^{r i}, folded mod x^f - 1
        folded = [0] * f
        for i in range(1, f):
            folded[(r * i) % f] -= i
        num = reduce_int(folded, ctx.ring.red, ctx.totient)
        v = Poly._raw([Fraction(c, f) for c in num])
        ctx.inv_cache[r] = v
        return v


def lcm(*values: int) -> int:
    return reduce(lambda x, y: x * y // math.gcd(x, y), values, 1)
