"""Truncated power series sum(c_k s^k, k < d) over a duck-typed coefficient ring.

Coefficients may be Fractions, :class:`~denumerant.cyclotomic.CycElem`,
Python complex numbers, or numpy vectors (a batch of series evaluated
side by side, e.g. one lane per primitive root).  The ring must provide
+, -, *, multiplication by int and division by int.  Rational constants
are pushed into the ring through an embedding inferred from a sample
coefficient.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial

import numpy as np

from . import kernels


def _all_true(v) -> bool:
    return bool(np.all(v))


def embedder(sample):
    """Return a function mapping Fractions into the ring that ``sample`` lives in."""
    if isinstance(sample, np.ndarray):
        if sample.dtype != object:
            return float
        flat = sample.ravel()
        if flat.size and _is_mp(flat[0]):
            import mpmath

            return lambda q: mpmath.mpf(q.numerator) / q.denominator
        return lambda q: q
    if isinstance(sample, (complex, float)):
        return float
    if _is_mp(sample):
        import mpmath

        return lambda q: mpmath.mpf(q.numerator) / q.denominator
    return lambda q: q


def _is_mp(x) -> bool:
    return type(x).__module__.startswith("mpmath")


def _is_native_complex(c) -> bool:
    if isinstance(c, np.ndarray):
        return c.dtype.kind in "fc"
    return isinstance(c, (complex, float))


class TruncSeries:
    """Immutable truncated series; all arithmetic is mod s^order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("a truncated series needs order >= 1")
        self.coeffs = coeffs

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def _check(self, other):
        if not isinstance(other, TruncSeries):
            return False
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        return TruncSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return TruncSeries(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self):
        return TruncSeries(-a for a in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return ts_mul(self, other)
        return TruncSeries(a * other for a in self.coeffs)

    def __rmul__(self, other):
        return TruncSeries(other * a for a in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries) or other.order != self.order:
            return False
        return all(_all_true(a == b) for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def __repr__(self):
        return f"TruncSeries({list(self.coeffs)!r})"


def ts_zero(order: int, zero=Fraction(0)) -> TruncSeries:
    return TruncSeries([zero] * order)


def ts_mul(p: TruncSeries, q: TruncSeries) -> TruncSeries:
    if p.order != q.order:
        raise ValueError(f"order mismatch: {p.order} vs {q.order}")
    a, b = p.coeffs, q.coeffs
    d = len(a)
    out = []
    for n in range(d):
        acc = a[0] * b[n]
        for i in range(1, n + 1):
            acc = acc + a[i] * b[n - i]
        out.append(acc)
    return TruncSeries(out)


def _batched(coeffs):
    # stack numpy/complex coefficients into an (order, batch) array
    arr = np.asarray([np.asarray(c, dtype=np.complex128).reshape(-1) for c in coeffs])
    shape = np.shape(coeffs[0])
    return arr, shape


def _unbatched(arr, shape, like):
    if isinstance(like, np.ndarray):
        return TruncSeries(row.reshape(shape) for row in arr)
    return TruncSeries(complex(row[0]) for row in arr)


def ts_log(g: TruncSeries) -> TruncSeries:
    """ln g mod s^d for g(0) = 1, via H' = G'/G integrated term by term."""
    c = g.coeffs
    if not _all_true(c[0] == 1):
        raise ValueError("ts_log needs constant term 1")
    d = len(c)
    if _is_native_complex(c[0]):
        arr, shape = _batched(c)
        return _unbatched(kernels.cseries_log(arr), shape, c[0])
    zero = c[0] - c[0]
    q = []
    for n in range(d - 1):
        acc = (n + 1) * c[n + 1]
        for i in range(1, n + 1):
            acc = acc - c[i] * q[n - i]
        q.append(acc)
    return TruncSeries([zero] + [q[k - 1] / k for k in range(1, d)])


def ts_exp(h: TruncSeries) -> TruncSeries:
    """exp(h) mod s^d for h(0) = 0, via the recurrence n F_n = sum k h_k F_{n-k}."""
    c = h.coeffs
    if not _all_true(c[0] == 0):
        raise ValueError("ts_exp needs constant term 0")
    d = len(c)
    if _is_native_complex(c[0]):
        arr, shape = _batched(c)
        return _unbatched(kernels.cseries_exp(arr), shape, c[0])
    one = c[0] + 1
    kh = [c[k] * k for k in range(d)]
    f = [one]
    for n in range(1, d):
        acc = kh[1] * f[n - 1]
        for k in range(2, n + 1):
            acc = acc + kh[k] * f[n - k]
        f.append(acc / n)
    return TruncSeries(f)


def ts_scale_arg(p: TruncSeries, b: int) -> TruncSeries:
    """p(b s)."""
    out, pw = [], 1
    for c in p.coeffs:
        out.append(c * pw)
        pw *= b
    return TruncSeries(out)


def power_sums(B, d: int) -> list[int]:
    """[sum(b^k for b in B) for k < d]."""
    sums = [0] * d
    for b in B:
        pw = 1
        for k in range(d):
            sums[k] += pw
            pw *= b
    return sums


def ts_sum_scaled(h: TruncSeries, B) -> TruncSeries:
    """sum(h(b s) for b in B), as coefficient k times the k-th power sum of B."""
    ps = power_sums(B, h.order)
    if _is_native_complex(h.coeffs[0]):
        ps = [float(p) for p in ps]
    return TruncSeries(c * p for c, p in zip(h.coeffs, ps))


_BERN: list[Fraction] = [Fraction(1)]
_BERN_LOCK = threading.Lock()


def bernoulli(n: int) -> list[Fraction]:
    """B_0..B_n with B_1 = -1/2, from sum_{j<=k} C(k+1, j) B_j = 0."""
    if n >= len(_BERN):
        with _BERN_LOCK:
            for k in range(len(_BERN), n + 1):
                s = sum(comb(k + 1, j) * _BERN[j] for j in range(k))
                _BERN.append(-s / (k + 1))
    return _BERN[: n + 1]


def todd_series(d: int) -> TruncSeries:
    """s/(e^s - 1) mod s^d."""
    B = bernoulli(d - 1)
    return TruncSeries(B[k] / factorial(k) for k in range(d))


def h_series(d: int) -> TruncSeries:
    """ln(s/(e^s - 1)) mod s^d = -sum B_k s^k / (k k!) with the B_1 = +1/2 sign."""
    if d < 1:
        raise ValueError("order must be >= 1")
    B = bernoulli(d - 1)
    out = [Fraction(0)]
    for k in range(1, d):
        bk = -B[k] if k == 1 else B[k]
        out.append(-bk / (k * factorial(k)))
    return TruncSeries(out)


def h_y_series(y, d: int) -> TruncSeries:
    """ln(1/(1 - y(e^s - 1))) mod s^d.

    G = 1 - y E with E = e^s - 1 rational, so every term of G'/G is y
    times a rational combination of earlier terms: one ring product per
    order instead of one per pair.
    """
    if d < 1:
        raise ValueError("order must be >= 1")
    emb = embedder(y)
    zero = y * 0
    q = []
    inv_fact = [Fraction(1, factorial(i)) for i in range(d)]
    for n in range(d - 1):
        r = zero + emb(-inv_fact[n])
        for i in range(1, n + 1):
            r = r + q[n - i] * emb(inv_fact[i])
        q.append(y * r)
    return TruncSeries([zero] + [-q[k - 1] / k for k in range(1, d)])
