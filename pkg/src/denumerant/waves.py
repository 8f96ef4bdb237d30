"""Exact Sylvester waves W_f(t; a) over the cyclotomic rings.

d(t; a) = sum over every divisor f of some a_i of W_f(t; a), each W_f a
quasi-polynomial of period f and degree < n(f | a).
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .cyclotomic import (
    CycCtx,
    divisor_union,
    get_ctx,
    inverse_one_minus,
)
from .gtodd import GtdSpec, gtodd_sequence
from .poly import Poly
from .quasipoly import QuasiPolynomial, qp_combine, qp_eval


class SequenceError(ValueError):
    """The input sequence violates a precondition of the decomposition."""


def validate_sequence(seq) -> tuple[int, ...]:
    seq = tuple(seq)
    if not seq:
        raise SequenceError("sequence a must be nonempty")
    for a in seq:
        if isinstance(a, bool) or not isinstance(a, int) or a <= 0:
            raise SequenceError(f"entries of a must be positive integers, got {a!r}")
    if len(set(seq)) != len(seq):
        raise SequenceError("entries of a must be distinct")
    if reduce(math.gcd, seq) != 1:
        raise SequenceError("gcd(a) must be 1")
    return seq


@dataclass(frozen=True)
class WaveContext:
    seq: tuple
    f: int
    div_idx: tuple
    nondiv_idx: tuple

    @classmethod
    def build(cls, seq, f: int) -> WaveContext:
        div = tuple(i for i, a in enumerate(seq) if a % f == 0)
        if not div:
            raise ValueError(f"f={f} divides no entry of {tuple(seq)}")
        nondiv = tuple(i for i, a in enumerate(seq) if a % f)
        return cls(tuple(seq), f, div, nondiv)

    @property
    def n_div(self) -> int:
        return len(self.div_idx)

    @property
    def prod_div(self) -> int:
        return math.prod(self.seq[i] for i in self.div_idx)


@dataclass(frozen=True)
class CoefficientTable:
    """rows[m][i] = c_{m,i}: coefficient of x^i in M_m(x) cofactor(x) Phi_f'(x) mod x^f - 1."""

    rows: tuple

    def __getitem__(self, m):
        return self.rows[m]

    def __len__(self):
        return len(self.rows)


@dataclass(frozen=True)
class WaveTrace:
    """Every intermediate of one W_f computation (f > 1)."""

    context: WaveContext
    inverses: dict  # a mod f -> v(x), standard form of 1/(1 - x^a)
    gtodd: tuple  # standard forms of the s^k coefficients, k < n_div
    inverse_product: Poly  # standard form of prod over nondivisible entries of v_i
    M: tuple  # M_m(x), m < n_div
    table: CoefficientTable
    wave: QuasiPolynomial


def _assemble(coeff_rows, n: int, prod_div: int, f: int) -> QuasiPolynomial:
    # P_i(t) = sum_m (-1)^(n+m+1) / (m! prod_div) c_{m,i-1} t^m
    scale = [Fraction((-1) ** (n + m + 1), math.factorial(m) * prod_div) for m in range(n)]
    comps = []
    for i in range(f):
        comps.append(Poly._raw([scale[m] * coeff_rows[m][i] for m in range(n)]))
    return QuasiPolynomial(comps)


def wave_one(seq) -> QuasiPolynomial:
    """W_1(t; a), the polynomial part."""
    seq = validate_sequence(seq)
    N = len(seq)
    A = gtodd_sequence(GtdSpec(plain=seq, order=N))
    rows = [[A[N - 1 - m]] for m in range(N)]
    return _assemble(rows, N, math.prod(seq), 1)


def wave_f_trace(seq, f: int) -> WaveTrace:
    seq = validate_sequence(seq)
    if f < 2:
        raise ValueError("wave_f_trace needs f >= 2; use wave_one for f = 1")
    wc = WaveContext.build(seq, f)
    ctx: CycCtx = get_ctx(f)
    ring = ctx.ring
    n = wc.n_div

    groups: dict[int, list[int]] = {}
    for i in wc.nondiv_idx:
        groups.setdefault(seq[i] % f, []).append(seq[i])
    inverses = {r: inverse_one_minus(ctx, r) for r in sorted(groups)}
    v = {r: ring(p) for r, p in inverses.items()}

    spec = GtdSpec(
        plain=tuple(seq[i] for i in wc.div_idx),
        mixed=tuple((tuple(B), v[r] - 1) for r, B in sorted(groups.items())),
        order=n,
    )
    F = gtodd_sequence(spec, one=ring.one())

    T = ring.one()
    for r, B in groups.items():
        T = T * v[r] ** len(B)

    M, rows = [], []
    for m in range(n):
        Mm = F[n - 1 - m] * T
        M.append(Mm.to_poly())
        rows.append(tuple(ctx.weighted_residues(Mm)))
    table = CoefficientTable(tuple(rows))
    wave = _assemble(rows, n, wc.prod_div, f)
    return WaveTrace(
        context=wc,
        inverses=inverses,
        gtodd=tuple(c.to_poly() for c in F),
        inverse_product=T.to_poly(),
        M=tuple(M),
        table=table,
        wave=wave,
    )


def wave_f(seq, f: int) -> QuasiPolynomial:
    """W_f(t; a) for f > 1 as [P_1, ..., P_f]."""
    return wave_f_trace(seq, f).wave


def _wave_job(args):
    seq, f = args
    return f, (wave_one(seq) if f == 1 else wave_f(seq, f))


def all_waves(seq, workers: int = 1) -> dict[int, QuasiPolynomial]:
    """{f: W_f} for every f dividing some entry, keyed in ascending f."""
    seq = validate_sequence(seq)
    fs = divisor_union(seq)
    jobs = [(seq, f) for f in fs]
    if workers is None:
        workers = os.cpu_count() or 1
    if workers > 1 and len(fs) > 1:
        # big f first: they are the slow jobs
        order = sorted(jobs, key=lambda j: -j[1])
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = dict(pool.map(_wave_job, order))
    else:
        results = dict(map(_wave_job, jobs))
    return {f: results[f] for f in fs}


def denumerant_from_waves(waves, t: int) -> Fraction:
    return sum((qp_eval(w, t) for w in waves.values()), Fraction(0))


def denumerant(seq, t: int, workers: int = 1) -> int:
    """d(t; a) through the exact wave decomposition."""
    value = denumerant_from_waves(all_waves(seq, workers), t)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral wave sum {value} at t={t}")
    return int(value)


def combined(seq, workers: int = 1) -> QuasiPolynomial:
    """All waves merged into one quasi-polynomial of period lcm(a)."""
    return qp_combine(all_waves(seq, workers))
