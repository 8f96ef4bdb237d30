"""Sylvester waves with each primitive root replaced by a floating value.

Every primitive f-th root is eta^j with eta = exp(2 pi i / f) and j
coprime to f.  All j are carried at once as the lanes of a numpy vector,
so one generalized Todd computation per f serves the whole orbit.
With ``digits`` set, lanes hold mpmath numbers at that working
precision instead of doubles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cyclotomic import divisor_union
from .gtodd import GtdSpec, gtodd_sequence
from .waves import WaveContext, validate_sequence


@dataclass(frozen=True)
class FloatWave:
    period: int
    components: tuple  # per residue class: coefficients ascending in t (real parts)
    max_imag: float  # largest discarded imaginary part
    digits: int | None = None

    def component(self, t: int):
        return self.components[(t - 1) % self.period]

    def evaluate(self, t: int):
        acc = 0.0
        if self.digits is not None:
            import mpmath

            with mpmath.workdps(self.digits):
                acc = mpmath.mpf(0)
                for c in reversed(self.component(t)):
                    acc = acc * t + c
                return acc
        for c in reversed(self.component(t)):
            acc = acc * t + c
        return acc

    __call__ = evaluate


class _Numeric:
    """Arithmetic helpers for double or mpmath lanes."""

    def __init__(self, digits):
        self.digits = digits
        if digits is not None:
            import mpmath

            self.mp = mpmath

    def roots(self, f: int):
        # eta^k for k < f, each computed from its own angle
        if self.digits is None:
            k = np.arange(f)
            return np.exp(2j * np.pi * k / f)
        mp = self.mp
        return np.array([mp.expjpi(mp.mpf(2 * k) / f) for k in range(f)], dtype=object)

    def ones(self, n: int):
        if self.digits is None:
            return np.ones(n, dtype=np.complex128)
        return np.array([self.mp.mpc(1) for _ in range(n)], dtype=object)

    def scalar(self, q: Fraction):
        if self.digits is None:
            return float(q)
        return self.mp.mpf(q.numerator) / q.denominator

    def real_imag(self, v):
        if self.digits is None:
            return float(v.real), abs(float(v.imag))
        return self.mp.mpf(v.real), float(abs(v.imag))


def float_wave_f(seq, f: int, digits: int | None = None) -> FloatWave:
    """W_f(t; a) with floating roots of unity (f = 1 allowed)."""
    seq = validate_sequence(seq)
    wc = WaveContext.build(seq, f)
    num = _Numeric(digits)
    if digits is not None:
        with num.mp.workdps(digits):
            return _float_wave(seq, f, wc, num)
    return _float_wave(seq, f, wc, num)


def _float_wave(seq, f, wc: WaveContext, num: _Numeric) -> FloatWave:
    n = wc.n_div
    J = [j for j in range(1, f + 1) if math.gcd(j, f) == 1]
    E = num.roots(f)
    inv1m = [None] + [1 / (1 - E[k]) for k in range(1, f)]

    groups: dict[int, list[int]] = {}
    for i in wc.nondiv_idx:
        groups.setdefault(seq[i] % f, []).append(seq[i])

    def lanes(values):
        if num.digits is None:
            return np.array(values, dtype=np.complex128)
        return np.array(values, dtype=object)

    mixed = []
    for r, B in sorted(groups.items()):
        y = lanes([E[(j * r) % f] * inv1m[(j * r) % f] for j in J])
        mixed.append((tuple(B), y))
    spec = GtdSpec(plain=tuple(seq[i] for i in wc.div_idx), mixed=tuple(mixed), order=n)
    F = gtodd_sequence(spec, one=num.ones(len(J)))

    scale = num.ones(len(J))
    for i in wc.nondiv_idx:
        scale = scale * lanes([inv1m[(j * seq[i]) % f] for j in J])

    # omega[i-1, j] = eta^(-i j) for residue index i = 1..f
    omega = np.empty((f, len(J)), dtype=E.dtype)
    for i in range(1, f + 1):
        for col, j in enumerate(J):
            omega[i - 1, col] = E[(-i * j) % f]

    prod_div = wc.prod_div
    per_m = []
    for m in range(n):
        coef = num.scalar(Fraction((-1) ** (n + m + 1), math.factorial(m) * prod_div))
        per_m.append(omega.dot(F[n - 1 - m] * scale) * coef)

    comps, max_imag = [], 0.0
    for i in range(f):
        row = []
        for m in range(n):
            re, im = num.real_imag(per_m[m][i])
            row.append(re)
            max_imag = max(max_imag, im)
        comps.append(tuple(row))
    return FloatWave(period=f, components=tuple(comps), max_imag=max_imag, digits=num.digits)


def float_all_waves(seq, digits: int | None = None, workers: int = 1) -> dict[int, FloatWave]:
    seq = validate_sequence(seq)
    fs = divisor_union(seq)
    if workers is not None and workers > 1 and len(fs) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            waves = list(pool.map(float_wave_f, [seq] * len(fs), fs, [digits] * len(fs)))
        return dict(zip(fs, waves))
    return {f: float_wave_f(seq, f, digits) for f in fs}


def float_denumerant(seq, t: int, digits: int | None = None, waves=None):
    """Approximate d(t; a); summation runs in ascending f for reproducibility."""
    if waves is None:
        waves = float_all_waves(seq, digits)
    if digits is not None:
        import mpmath

        with mpmath.workdps(digits):
            return mpmath.fsum(waves[f].evaluate(t) for f in sorted(waves))
    total = 0.0
    for f in sorted(waves):
        total += waves[f].evaluate(t)
    return total
