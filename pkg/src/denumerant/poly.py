"""Dense univariate polynomials over the rationals.

A polynomial a_0 + a_1 x + ... + a_n x^n is stored as the tuple
(a_0, a_1, ..., a_n) of Fractions with a_n != 0; the zero polynomial
is the empty tuple.  Values are immutable.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC

KARATSUBA_CUTOFF = 64


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, _RationalABC)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"cannot use {type(c).__name__} as a rational coefficient")


def _strip(coeffs: list) -> tuple:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=()):
        self.coeffs = _strip([_frac(c) for c in coeffs])
        self._hash = None

    @classmethod
    def _raw(cls, coeffs) -> Poly:
        # trusted constructor: coeffs already Fractions
        p = cls.__new__(cls)
        p.coeffs = _strip(list(coeffs))
        p._hash = None
        return p

    @classmethod
    def monomial(cls, k: int, c=1) -> Poly:
        return cls._raw([Fraction(0)] * k + [_frac(c)])

    @classmethod
    def constant(cls, c) -> Poly:
        return cls._raw([_frac(c)])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __neg__(self):
        return Poly._raw([-c for c in self.coeffs])

    def __add__(self, other):
        if not isinstance(other, Poly):
            try:
                other = Poly.constant(other)
            except TypeError:
                return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Poly):
            try:
                other = Poly.constant(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Poly):
            return poly_mul(self, other)
        try:
            c = _frac(other)
        except TypeError:
            return NotImplemented
        if not c:
            return Poly()
        return Poly._raw([c * a for a in self.coeffs])

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = _frac(other)
        if not c:
            raise ZeroDivisionError("polynomial division by zero scalar")
        return Poly._raw([a / c for a in self.coeffs])

    def __divmod__(self, other):
        return poly_divrem(self, other)

    def __floordiv__(self, other):
        return poly_divrem(self, other)[0]

    def __mod__(self, other):
        return poly_divrem(self, other)[1]

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __call__(self, v):
        return poly_eval(self, v)

    def derivative(self) -> Poly:
        return poly_derivative(self)

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        return self.to_str()

    def to_str(self, var: str = "x") -> str:
        """Human-readable form, highest power first."""
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                if mag == 1:
                    body = mono
                elif mag.numerator == 1:
                    body = f"{mono}/{mag.denominator}"
                elif mag.denominator == 1:
                    body = f"{mag.numerator}*{mono}"
                else:
                    body = f"{mag.numerator}*{mono}/{mag.denominator}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


X = Poly._raw([Fraction(0), Fraction(1)])


def _school(a, b):
    if all(c.denominator == 1 for c in a) and all(c.denominator == 1 for c in b):
        return [Fraction(c) for c in _school_int([c.numerator for c in a], [c.numerator for c in b])]
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def _school_int(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] += ai * bj
    return out


def _add_into(dst, src, offset):
    for i, c in enumerate(src):
        dst[i + offset] += c


def _karatsuba(a, b):
    if len(a) < KARATSUBA_CUTOFF or len(b) < KARATSUBA_CUTOFF:
        return _school(a, b)
    m = max(len(a), len(b)) // 2
    a0, a1 = a[:m], a[m:]
    b0, b1 = b[:m], b[m:]
    z0 = _karatsuba(a0, b0) if a0 and b0 else []
    z2 = _karatsuba(a1, b1) if a1 and b1 else []
    sa = _padd(a0, a1)
    sb = _padd(b0, b1)
    z1 = _karatsuba(sa, sb)
    for i, c in enumerate(z0):
        z1[i] -= c
    for i, c in enumerate(z2):
        z1[i] -= c
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    _add_into(out, z0, 0)
    _add_into(out, z1[: len(out) - m], m)
    _add_into(out, z2, 2 * m)
    return out


def _padd(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return out


def poly_mul(p: Poly, q: Poly) -> Poly:
    """Exact product; schoolbook below KARATSUBA_CUTOFF terms, Karatsuba above."""
    if not p.coeffs or not q.coeffs:
        return Poly()
    return Poly._raw(_karatsuba(list(p.coeffs), list(q.coeffs)))


def poly_divrem(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if not q.coeffs:
        raise ZeroDivisionError("division by the zero polynomial")
    dq = q.degree
    if p.degree < dq:
        return Poly(), p
    rem = list(p.coeffs)
    lead = q.coeffs[-1]
    monic = lead == 1
    quot = [Fraction(0)] * (p.degree - dq + 1)
    qc = q.coeffs
    for k in range(p.degree - dq, -1, -1):
        c = rem[k + dq]
        if not c:
            continue
        if not monic:
            c = c / lead
        quot[k] = c
        for j in range(dq + 1):
            if qc[j]:
                rem[k + j] -= c * qc[j]
    return Poly._raw(quot), Poly._raw(rem[:dq])


def poly_eval(p: Poly, v):
    """Horner evaluation at v; v may be any ring element that accepts Fractions."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * v + c
    return acc


def poly_derivative(p: Poly) -> Poly:
    return Poly._raw([k * c for k, c in enumerate(p.coeffs)][1:])
