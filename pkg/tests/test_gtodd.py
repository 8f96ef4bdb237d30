"""gtodd_sequence against a direct product of the truncated factors (no log/exp)."""

from fractions import Fraction as Fr
from math import factorial

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from denumerant.cyclotomic import get_ctx, inverse_one_minus
from denumerant.gtodd import GtdSpec, group_mixed, gtodd_sequence
from denumerant.poly import X
from denumerant.series import TruncSeries, bernoulli, ts_mul


def _const(c, one, d):
    return TruncSeries([one * c] + [one * 0] * (d - 1))


def direct_product(spec: GtdSpec, one=Fr(1)):
    d = spec.order
    zero = one * 0
    B = bernoulli(d)
    acc = _const(1, one, d)
    # e^{a s}
    acc = ts_mul(acc, TruncSeries([one * (spec.shift**k / factorial(k)) for k in range(d)]))
    for b in spec.plain:
        # g(bs) = sum B_k (bs)^k / k!  (B_1 = -1/2)
        acc = ts_mul(acc, TruncSeries([one * (B[k] * Fr(b) ** k / factorial(k)) for k in range(d)]))
    for Bs, y in spec.mixed:
        for b in Bs:
            # 1/(1 - u), u = y (e^{bs} - 1): geometric sum, u has no constant term
            u = TruncSeries([zero] + [y * Fr(b**k, factorial(k)) for k in range(1, d)])
            g, power = _const(1, one, d), _const(1, one, d)
            for _ in range(1, d):
                power = ts_mul(power, u)
                g = g + power
            acc = ts_mul(acc, g)
    return acc


def test_empty_product():
    assert gtodd_sequence(GtdSpec(order=4)) == TruncSeries([Fr(1), 0, 0, 0])


def test_example_two_ten():
    ring = get_ctx(3).ring
    y = ring(inverse_one_minus(get_ctx(3), 1)) - 1  # (zeta - 1)/3
    assert y.to_poly() == (X - 1) / 3
    spec = GtdSpec(plain=(3, 6), mixed=(((1,), y),), order=2)
    F = gtodd_sequence(spec, one=ring.one())
    assert F[0] == ring.one()
    assert F[1].to_poly() == (2 * X - 29) / 6


def test_plain_product_against_direct():
    spec = GtdSpec(plain=(1, 3, 6), order=3)
    F = gtodd_sequence(spec)
    assert F == direct_product(spec)
    assert list(F) == [1, -5, Fr(127, 12)]


@given(
    st.fractions(-3, 3, max_denominator=4),
    st.lists(st.integers(1, 9), max_size=4),
    st.lists(st.tuples(st.lists(st.integers(1, 9), min_size=1, max_size=3),
                       st.fractions(-2, 2, max_denominator=5)), max_size=3),
    st.integers(1, 7),
)
def test_rational_against_direct(shift, plain, mixed, d):
    spec = GtdSpec(shift=shift, plain=plain, mixed=mixed, order=d)
    assert gtodd_sequence(spec) == direct_product(spec)


@pytest.mark.parametrize("f", [4, 5, 9])
def test_cyclotomic_against_direct(f):
    ctx = get_ctx(f)
    ring = ctx.ring
    mixed = tuple(((a, a + f), ring(inverse_one_minus(ctx, a)) - 1) for a in range(1, 4) if a % f)
    spec = GtdSpec(plain=(f, 2 * f), mixed=mixed, order=5)
    assert gtodd_sequence(spec, one=ring.one()) == direct_product(spec, one=ring.one())


def test_complex_lanes_against_direct():
    ys = np.array([0.3 + 0.2j, -0.5 + 1.1j, 0.25 - 0.4j])
    spec = GtdSpec(plain=(2, 5), mixed=(((1, 3), ys), ((4,), ys * 2)), order=6)
    F = gtodd_sequence(spec, one=np.ones(3, dtype=complex))
    for lane in range(3):
        one = complex(1)
        scalar = GtdSpec(plain=(2, 5), mixed=(((1, 3), complex(ys[lane])), ((4,), complex(2 * ys[lane]))), order=6)
        ref = direct_product(scalar, one=one)
        assert np.allclose([c[lane] for c in F], [complex(c) for c in ref], rtol=1e-10)


def test_group_mixed_merges_equal_y():
    ring = get_ctx(5).ring
    y1, y2 = ring(X), ring(X)
    groups = group_mixed([((1,), y1), ((2, 3), y2), ((4,), ring(X**2))])
    assert [sorted(B) for B, _ in groups] == [[1, 2, 3], [4]]


def test_spec_validation():
    with pytest.raises(ValueError):
        GtdSpec(order=0)
    with pytest.raises(ValueError):
        GtdSpec(plain=(0,), order=2)
