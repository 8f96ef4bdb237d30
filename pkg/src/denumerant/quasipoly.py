"""Quasi-polynomials F(t) = [P_1(t), ..., P_f(t)] with exact coefficients.

F(t) = P_i(t) when t = i (mod f), where t = 0 (mod f) selects P_f.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import lcm
from .poly import Poly


class QuasiPolynomial:
    __slots__ = ("period", "components")

    def __init__(self, components):
        comps = tuple(c if isinstance(c, Poly) else Poly(c) for c in components)
        if not comps:
            raise ValueError("a quasi-polynomial needs at least one component")
        self.components = comps
        self.period = len(comps)

    @classmethod
    def constant(cls, c, period: int = 1) -> QuasiPolynomial:
        return cls([Poly.constant(c)] * period)

    @classmethod
    def zero(cls, period: int = 1) -> QuasiPolynomial:
        return cls([Poly()] * period)

    @property
    def degree(self) -> int:
        return max(p.degree for p in self.components)

    def component(self, t: int) -> Poly:
        return self.components[(t - 1) % self.period]

    def __call__(self, t: int) -> Fraction:
        return qp_eval(self, t)

    def lift(self, period: int) -> QuasiPolynomial:
        return qp_lift(self, period)

    def __add__(self, other):
        if not isinstance(other, QuasiPolynomial):
            return NotImplemented
        return qp_add(self, other)

    def __eq__(self, other):
        if not isinstance(other, QuasiPolynomial):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return f"QuasiPolynomial({self})"

    def __str__(self):
        return "[" + ", ".join(p.to_str("t") for p in self.components) + "]"


def qp_eval(qp: QuasiPolynomial, t: int) -> Fraction:
    if t < 0:
        raise ValueError("quasi-polynomials here are evaluated at t >= 0")
    val = qp.component(t)(t)
    return Fraction(val)


def qp_lift(qp: QuasiPolynomial, period: int) -> QuasiPolynomial:
    """Same function written with a period that is a multiple of the current one."""
    f = qp.period
    if period % f:
        raise ValueError(f"cannot lift period {f} to {period}")
    return QuasiPolynomial(qp.components[(j - 1) % f] for j in range(1, period + 1))


def qp_add(p: QuasiPolynomial, q: QuasiPolynomial) -> QuasiPolynomial:
    L = lcm(p.period, q.period)
    a, b = p.lift(L), q.lift(L)
    return QuasiPolynomial(x + y for x, y in zip(a.components, b.components))


def qp_combine(waves) -> QuasiPolynomial:
    """Sum of a {f: wave} mapping (or iterable of waves) as one quasi-polynomial."""
    items = list(waves.values()) if isinstance(waves, dict) else list(waves)
    if not items:
        return QuasiPolynomial.zero()
    L = lcm(*(w.period for w in items))
    acc = [Poly()] * L
    for w in items:
        f = w.period
        acc = [acc[j] + w.components[j % f] for j in range(L)]
    return QuasiPolynomial(acc)
