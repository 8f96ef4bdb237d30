import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from denumerant.cyclotomic import (
    CycElem,
    cyclotomic_poly,
    divisor_union,
    divisors,
    get_ctx,
    inverse_one_minus,
    mod_xf_reduce,
    standard_form,
    totient,
)
from denumerant.poly import X, Poly


def test_small_cyclotomics():
    assert cyclotomic_poly(1) == X - 1
    assert cyclotomic_poly(3) == X**2 + X + 1
    assert cyclotomic_poly(6) == X**2 - X + 1
    assert cyclotomic_poly(12) == X**4 - X**2 + 1


def test_phi_105_has_a_minus_two():
    # smallest index with a coefficient outside {-1, 0, 1}
    coeffs = cyclotomic_poly(105).coeffs
    assert min(coeffs) == -2
    assert all(abs(c) <= 1 for f in range(1, 105) for c in cyclotomic_poly(f).coeffs)


def test_cyclotomic_rejects_zero():
    with pytest.raises(ValueError):
        cyclotomic_poly(0)


@pytest.mark.parametrize("n", [1, 2, 6, 30, 64, 97, 120, 200])
def test_product_identity(n):
    prod = Poly.constant(1)
    for d in divisors(n):
        prod = prod * cyclotomic_poly(d)
    assert prod == X**n - 1


def test_divisors_and_totient():
    assert divisors(6) == [1, 2, 3, 6]
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisor_union((1, 3, 6)) == [1, 2, 3, 6]
    for n in range(1, 60):
        assert totient(n) == sum(math.gcd(n, k) == 1 for k in range(1, n + 1))
        assert cyclotomic_poly(n).degree == totient(n)


def test_context_fields():
    ctx = get_ctx(3)
    assert ctx.phi_f == X**2 + X + 1
    assert ctx.cofactor == X - 1
    assert ctx.phi_deriv == 2 * X + 1
    assert ctx.totient == 2


def test_standard_form_examples():
    ctx = get_ctx(3)
    assert standard_form(ctx, X**3) == Poly.constant(1)
    assert standard_form(ctx, X**2) == -X - 1
    m0 = (X + 2) * (2 * X - 29) / 18
    assert standard_form(ctx, m0) == Poly([Fraction(-10, 3), Fraction(-3, 2)])


def test_inverse_examples():
    assert inverse_one_minus(get_ctx(3), 1) == (X + 2) / 3
    assert inverse_one_minus(get_ctx(2), 1) == Poly.constant(Fraction(1, 2))
    assert inverse_one_minus(get_ctx(4), 2) == Poly.constant(Fraction(1, 2))
    with pytest.raises(ValueError):
        inverse_one_minus(get_ctx(4), 8)


@given(st.integers(2, 40), st.integers(1, 200))
def test_inverse_is_an_inverse(f, a):
    if a % f == 0:
        return
    ctx = get_ctx(f)
    v = inverse_one_minus(ctx, a)
    assert standard_form(ctx, v * (1 - X**a)) == Poly.constant(1)


def test_mod_xf_reduce_examples():
    assert mod_xf_reduce(3, X**4 + X) == 2 * X
    assert mod_xf_reduce(2, X**2 + 1) == Poly.constant(2)
    ctx = get_ctx(3)
    m0 = Poly([Fraction(-10, 3), Fraction(-3, 2)])
    got = mod_xf_reduce(3, m0 * (X - 1) * (2 * X + 1))
    assert got == Poly([Fraction(1, 3), Fraction(29, 6), Fraction(-31, 6)])
    assert ctx.weighted_residues(ctx.ring(m0)) == list(got.coeffs)


small = st.lists(st.fractions(-9, 9, max_denominator=7), max_size=12).map(Poly)


@given(st.integers(1, 30), small, small)
def test_cycelem_matches_poly_arithmetic(f, p, q):
    ctx = get_ctx(f)
    ring = ctx.ring
    a, b = ring(p), ring(q)
    assert (a * b).to_poly() == standard_form(ctx, p * q)
    assert (a + b).to_poly() == standard_form(ctx, p + q)
    assert (a - b).to_poly() == standard_form(ctx, p - q)
    assert a * 0 == ring.zero()
    assert a * ring.one() == a


def test_cycelem_ring_mismatch():
    with pytest.raises(ValueError):
        get_ctx(5).ring.one() * get_ctx(7).ring.one()
    assert isinstance(get_ctx(5).ring(Fraction(1, 3)), CycElem)


def test_evaluation_at_a_primitive_root():
    # standard form preserves values at every primitive root
    import cmath

    ctx = get_ctx(12)
    p = X**17 - 3 * X**5 + Fraction(1, 7)
    sp = standard_form(ctx, p)
    for j in (1, 5, 7, 11):
        z = cmath.exp(2j * cmath.pi * j / 12)
        assert abs(complex(p(z)) - complex(sp(z))) < 1e-9
