"""Generalized Todd sequences by the log-exponential trick.

F(s) = e^{a s} prod_{b in B0} g(b s) prod_i prod_{b in B_i} g(b s, y_i)

with g(s) = s/(e^s - 1) and g(s, y) = 1/(1 - y(e^s - 1)).  The log of
each factor is cheap, so ln F is assembled as a sum of argument-scaled
logs and exponentiated once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .series import (
    TruncSeries,
    embedder,
    h_series,
    h_y_series,
    ts_exp,
    ts_sum_scaled,
)


@dataclass(frozen=True)
class GtdSpec:
    shift: Fraction = Fraction(0)
    plain: tuple = ()
    mixed: tuple = field(default=())  # ((B_i, y_i), ...)
    order: int = 1

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be >= 1")
        object.__setattr__(self, "shift", Fraction(self.shift))
        object.__setattr__(self, "plain", tuple(self.plain))
        object.__setattr__(self, "mixed", tuple((tuple(B), y) for B, y in self.mixed))
        for b in self.plain:
            if b == 0:
                raise ValueError("multiset entries must be nonzero")
        for B, _ in self.mixed:
            if any(b == 0 for b in B):
                raise ValueError("multiset entries must be nonzero")


def _same(u, v) -> bool:
    if isinstance(u, np.ndarray) or isinstance(v, np.ndarray):
        return np.shape(u) == np.shape(v) and bool(np.all(u == v))
    return bool(u == v)


def _key(y):
    if isinstance(y, np.ndarray):
        if y.dtype == object:
            return None
        return (y.shape, y.dtype.str, y.tobytes())
    try:
        return hash(y), y
    except TypeError:
        return None


def group_mixed(mixed) -> list[tuple[list, object]]:
    """Merge entries with equal y so each h(s, y) is built once."""
    groups: list[tuple[list, object]] = []
    index: dict = {}
    for B, y in mixed:
        k = _key(y)
        if k is not None:
            if k in index:
                groups[index[k]][0].extend(B)
            else:
                index[k] = len(groups)
                groups.append((list(B), y))
            continue
        for gB, gy in groups:
            if _same(gy, y):
                gB.extend(B)
                break
        else:
            groups.append((list(B), y))
    return groups


def gtodd_sequence(spec: GtdSpec, one=None) -> TruncSeries:
    """F(s) mod s^order.

    ``one`` fixes the coefficient ring when no y value does (e.g. a
    numpy vector of ones for batched complex evaluation); by default the
    ring is taken from the first y, or Q.
    """
    d = spec.order
    if one is None:
        one = (spec.mixed[0][1] * 0 + 1) if spec.mixed else Fraction(1)
    emb = embedder(one)
    zero = one * 0

    H = [zero] * d
    if spec.plain:
        for k, c in enumerate(ts_sum_scaled(h_series(d), spec.plain)):
            if k and c:
                H[k] = H[k] + emb(c)
    for B, y in group_mixed(spec.mixed):
        for k, c in enumerate(ts_sum_scaled(h_y_series(y, d), B)):
            if k:
                H[k] = H[k] + c
    if spec.shift and d > 1:
        H[1] = H[1] + emb(spec.shift)
    return ts_exp(TruncSeries(H))
