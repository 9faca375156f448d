"""Scalar arithmetic, elements, inner product, and projections."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dualtoeplitz import (
    Element,
    GaussianRational,
    as_scalar,
    bergman_project,
    complement_project,
    harmonic_project,
    inner_product,
    norm_sq,
)

from oracle_quadrature import inner_product_quadrature

rationals = st.fractions(
    min_value=Fraction(-4), max_value=Fraction(4), max_denominator=12
)
scalars = st.builds(GaussianRational, rationals, rationals)
nonzero_scalars = scalars.filter(lambda c: not c.is_zero)
exponents = st.integers(min_value=0, max_value=4)
term_lists = st.lists(
    st.tuples(st.tuples(exponents, exponents), scalars), max_size=4
)
elements = st.builds(Element, term_lists)

HYP = settings(derandomize=True, max_examples=60, deadline=None)


class TestGaussianRational:
    def test_normalization(self):
        c = GaussianRational(Fraction(2, 4), Fraction(-6, 8))
        assert (c.num_re, c.num_im, c.den) == (2, -3, 4)
        assert c.re == Fraction(1, 2)
        assert c.im == Fraction(-3, 4)

    def test_int_inputs(self):
        c = GaussianRational(3, -2)
        assert (c.num_re, c.num_im, c.den) == (3, -2, 1)

    def test_rejects_float(self):
        with pytest.raises(TypeError):
            GaussianRational(0.5)

    @HYP
    @given(rationals, rationals)
    def test_parts_round_trip(self, re_part, im_part):
        c = GaussianRational(re_part, im_part)
        assert c.re == re_part
        assert c.im == im_part
        assert c.den > 0
        from math import gcd

        assert gcd(c.num_re, c.num_im, c.den) == 1

    @HYP
    @given(scalars, scalars)
    def test_add_matches_fraction_pairs(self, x, y):
        s = x + y
        assert s.re == x.re + y.re
        assert s.im == x.im + y.im

    @HYP
    @given(scalars, scalars)
    def test_mul_matches_fraction_pairs(self, x, y):
        p = x * y
        assert p.re == x.re * y.re - x.im * y.im
        assert p.im == x.re * y.im + x.im * y.re

    @HYP
    @given(scalars, nonzero_scalars)
    def test_division_inverts_multiplication(self, x, y):
        assert (x / y) * y == x
        assert y * y.inverse() == 1

    @HYP
    @given(scalars)
    def test_conjugate_involution(self, x):
        assert x.conjugate().conjugate() == x
        assert (x * x.conjugate()).re == x.abs2()
        assert (x * x.conjugate()).im == 0

    def test_zero_division(self):
        one = GaussianRational(1)
        zero = GaussianRational(0)
        with pytest.raises(ZeroDivisionError):
            one / zero
        with pytest.raises(ZeroDivisionError):
            zero.inverse()

    def test_cross_type_arithmetic(self):
        c = GaussianRational(Fraction(1, 2), 1)
        assert c + 1 == GaussianRational(Fraction(3, 2), 1)
        assert 1 + c == c + 1
        assert 2 * c == GaussianRational(1, 2)
        assert c - Fraction(1, 2) == GaussianRational(0, 1)
        assert Fraction(1, 2) - c == GaussianRational(0, -1)
        assert 1 / GaussianRational(0, 1) == GaussianRational(0, -1)

    def test_eq_and_hash_against_numeric_tower(self):
        c = GaussianRational(Fraction(3, 2))
        assert c == Fraction(3, 2)
        assert hash(c) == hash(Fraction(3, 2))
        assert GaussianRational(5) == 5
        assert hash(GaussianRational(5)) == hash(5)
        assert GaussianRational(1, 1) != 1

    def test_real_sign_and_flags(self):
        assert GaussianRational(Fraction(-2, 3)).real_sign() == -1
        assert GaussianRational(0, 5).real_sign() == 0
        assert GaussianRational(1).is_real
        assert not GaussianRational(1, 1).is_real
        assert GaussianRational(0).is_zero
        assert not GaussianRational(0, Fraction(1, 7)).is_zero

    def test_as_scalar(self):
        assert as_scalar(3) == GaussianRational(3)
        assert as_scalar(Fraction(1, 2)) == GaussianRational(Fraction(1, 2))
        c = GaussianRational(1, 2)
        assert as_scalar(c) is c
        with pytest.raises(TypeError):
            as_scalar(1.5)


class TestElement:
    def test_merge_and_drop(self):
        e = Element(
            [
                ((1, 1), GaussianRational(Fraction(1, 2))),
                ((1, 1), GaussianRational(Fraction(1, 2))),
                ((2, 0), GaussianRational(1)),
                ((2, 0), GaussianRational(-1)),
            ]
        )
        assert e == Element.monomial(1, 1)
        assert len(e) == 1

    def test_rejects_bad_exponents(self):
        with pytest.raises(ValueError):
            Element([((-1, 0), GaussianRational(1))])
        with pytest.raises(ValueError):
            Element([((1.0, 0), GaussianRational(1))])

    def test_terms_sorted(self):
        e = Element.monomial(2, 1) + Element.monomial(0, 3) + Element.monomial(2, 0)
        assert [(mono.n, mono.m) for mono, _ in e.terms()] == [(0, 3), (2, 0), (2, 1)]

    @HYP
    @given(elements, elements, elements)
    def test_ring_axioms(self, f, g, h):
        assert f + g == g + f
        assert (f + g) + h == f + (g + h)
        assert f * g == g * f
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert f + Element.zero() == f
        assert f * Element.one() == f
        assert f - f == Element.zero()

    @HYP
    @given(elements)
    def test_conjugate_involution(self, f):
        assert f.conjugate().conjugate() == f

    @HYP
    @given(elements, elements)
    def test_conjugate_is_multiplicative(self, f, g):
        assert (f * g).conjugate() == f.conjugate() * g.conjugate()

    def test_harmonic_flag(self):
        assert Element.monomial(3, 0).is_harmonic
        assert Element.monomial(0, 2).is_harmonic
        assert Element.one().is_harmonic
        assert not Element.monomial(1, 1).is_harmonic
        assert (Element.monomial(2, 0) + Element.monomial(0, 5)).is_harmonic


QUADRATURE_BATTERY = [
    # (f terms, g terms) with exponents <= 3
    ([((1, 0), (1, 0))], [((1, 0), (1, 0))]),
    ([((2, 1), (1, 0))], [((1, 0), (1, 0))]),
    ([((1, 0), (1, 0))], [((0, 1), (1, 0))]),
    ([((3, 2), (Fraction(1, 2), Fraction(1, 3)))], [((2, 1), (1, -2))]),
    (
        [((1, 1), (1, 0)), ((0, 0), (Fraction(-1, 2), 0))],
        [((1, 1), (1, 0)), ((0, 0), (Fraction(-1, 2), 0))],
    ),
    (
        [((2, 0), (0, 1)), ((1, 2), (Fraction(2, 3), 0))],
        [((0, 2), (1, 1)), ((3, 1), (0, Fraction(-1, 5)))],
    ),
    (
        [((3, 3), (Fraction(7, 4), 0)), ((2, 2), (0, 1)), ((1, 0), (1, 1))],
        [((3, 3), (1, 0)), ((0, 1), (Fraction(1, 6), Fraction(1, 7)))],
    ),
    ([((0, 0), (1, 0))], [((0, 0), (1, 0))]),
    ([((2, 3), (1, 0)), ((1, 2), (0, 2))], [((1, 2), (3, 0))]),
    ([((3, 0), (1, 1))], [((0, 3), (1, -1))]),
]


def _element_from_pairs(terms):
    return Element(
        [
            ((n, m), GaussianRational(re_part, im_part))
            for (n, m), (re_part, im_part) in terms
        ]
    )


class TestInnerProduct:
    @pytest.mark.parametrize("f_terms,g_terms", QUADRATURE_BATTERY)
    def test_against_quadrature_oracle(self, f_terms, g_terms):
        value = inner_product(
            _element_from_pairs(f_terms), _element_from_pairs(g_terms)
        )
        assert (value.re, value.im) == inner_product_quadrature(f_terms, g_terms)

    def test_monomial_closed_form(self):
        # <z^n zb^m, z^k zb^l> = 2/(n+m+k+l+2) iff n-m == k-l, else 0
        for n in range(4):
            for m in range(4):
                for k in range(4):
                    for l in range(4):
                        value = inner_product(
                            Element.monomial(n, m), Element.monomial(k, l)
                        )
                        if n - m == k - l:
                            assert value == Fraction(2, n + m + k + l + 2)
                        else:
                            assert value.is_zero

    @HYP
    @given(elements, elements, elements, scalars)
    def test_sesquilinear(self, f, g, h, c):
        assert inner_product(f + g, h) == inner_product(f, h) + inner_product(g, h)
        assert inner_product(c * f, h) == c * inner_product(f, h)
        assert inner_product(h, c * f) == c.conjugate() * inner_product(h, f)

    @HYP
    @given(elements, elements)
    def test_conjugation_identities(self, f, g):
        assert inner_product(f.conjugate(), g.conjugate()) == inner_product(g, f)
        assert inner_product(f, g) == inner_product(g, f).conjugate()

    @HYP
    @given(elements)
    def test_positivity(self, f):
        value = norm_sq(f)
        assert value >= 0
        assert (value == 0) == f.is_zero


class TestProjections:
    def test_analytic_projection_of_monomials(self):
        # P(z^n zb^m) = ((n-m+1)/(n+1)) z^(n-m) for n >= m, else 0
        for n in range(5):
            for m in range(5):
                p = bergman_project(Element.monomial(n, m))
                if n >= m:
                    expected = Element.monomial(
                        n - m, 0, Fraction(n - m + 1, n + 1)
                    )
                    assert p == expected
                else:
                    assert p.is_zero

    @HYP
    @given(elements)
    def test_harmonic_plus_complement(self, f):
        assert harmonic_project(f) + complement_project(f) == f

    @HYP
    @given(elements)
    def test_idempotent(self, f):
        q = harmonic_project(f)
        assert harmonic_project(q) == q
        c = complement_project(f)
        assert complement_project(c) == c
        assert harmonic_project(c).is_zero

    @HYP
    @given(elements)
    def test_projection_output_is_harmonic(self, f):
        assert harmonic_project(f).is_harmonic

    @HYP
    @given(elements, elements)
    def test_self_adjoint(self, f, g):
        assert inner_product(harmonic_project(f), g) == inner_product(
            f, harmonic_project(g)
        )

    @HYP
    @given(elements, elements)
    def test_complement_orthogonal_to_harmonic(self, f, g):
        assert inner_product(complement_project(f), harmonic_project(g)).is_zero

    def test_harmonic_monomials_collapse(self):
        for k in range(5):
            assert complement_project(Element.monomial(k, 0)).is_zero
            assert complement_project(Element.monomial(0, k)).is_zero

    def test_known_values(self):
        # (I-Q)(z zb) = z zb - 1/2
        f0 = complement_project(Element.monomial(1, 1))
        assert f0 == Element(
            [((1, 1), GaussianRational(1)), ((0, 0), GaussianRational(Fraction(-1, 2)))]
        )
        assert norm_sq(f0) == Fraction(1, 12)
        # Q(z^2 zb^2) = 1/3
        assert harmonic_project(Element.monomial(2, 2)) == Element(
            [((0, 0), GaussianRational(Fraction(1, 3)))]
        )
