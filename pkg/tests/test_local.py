from __future__ import annotations

import pytest

from cmtype.errors import (
    CharacteristicTwoError,
    NotOrderTwoError,
    SmallCharacteristicError,
)
from cmtype.fields import QQ, prime_field
from cmtype.local import (
    DBL,
    SQF3,
    TRP,
    is_reduced_local,
    milnor_number,
    split_one_square,
    split_quadratic,
    tangent_cone_pattern,
)
from cmtype.parser import parse_series
from cmtype.series import substitute

from conftest import S, random_linear_change, random_polynomial, random_unit

V3 = ("x0", "x1", "x2")


def P3(text, prec=14):
    return parse_series(text, V3, QQ, prec)


class TestSplitQuadratic:
    def test_sum_of_two_squares(self):
        r = split_quadratic(P3("x1^2 + x2^2", prec=12))
        assert r.squares_split == 1
        assert r.residual.same_below(parse_series("x1^2", ("x0", "x1"), QQ, 10))
        assert r.verified

    def test_square_plus_curve(self):
        r = split_quadratic(P3("x0^3 + x1^4 + x2^2"))
        assert r.residual.same_below(parse_series("x0^3 + x1^4", ("x0", "x1"), QQ, 12))

    def test_cross_term_completion(self):
        r = split_quadratic(P3("x2^2 + 2*x0*x2 + x0^3"))
        assert r.residual.same_below(
            parse_series("x0^3 - x0^2", ("x0", "x1"), QQ, 12))

    def test_characteristic_two_rejected(self):
        f = parse_series("x1^2 + x2^2", V3, prime_field(2), 10)
        with pytest.raises(CharacteristicTwoError):
            split_quadratic(f)

    def test_wrong_order_rejected(self):
        with pytest.raises(NotOrderTwoError):
            split_quadratic(P3("x0^3 + x1^3 + x2^3"))

    def test_roundtrip_verified_random(self, rng):
        done = 0
        while done < 20:
            f = random_polynomial(rng, V3, 12, min_deg=2, max_deg=4, n_terms=5)
            if f.order() != 2:
                continue
            r = split_quadratic(f)
            assert r.verified
            done += 1


class TestMilnor:
    def test_node(self):
        m = milnor_number(S("x^2 + y^2"))
        assert (m.value, m.certified) == (1, True)

    def test_higher_cusp(self):
        m = milnor_number(S("x^3 + y^4", prec=14))
        assert (m.value, m.certified) == (6, True)

    def test_double_line_infinite(self):
        m = milnor_number(S("y^2"))
        assert not m.finite

    def test_unit_and_linear_invariance(self, rng):
        germs = ["x^2+y^2", "x^3+y^4", "x^2*y+y^4", "x^3+y^5", "x^2+y^5"]
        count = 0
        while count < 100:
            base = S(germs[count % len(germs)], prec=16)
            mu = milnor_number(base).value
            u = random_unit(rng, ("x", "y"), 16)
            assert milnor_number(u * base).value == mu
            images = random_linear_change(rng, ("x", "y"), 16)
            assert milnor_number(substitute(base, images)).value == mu
            count += 1


class TestReduced:
    def test_cusp_reduced(self):
        assert is_reduced_local(S("y^2 - x^3"))

    def test_square_factor(self):
        assert not is_reduced_local(S("x*y^2"))

    def test_smooth_conic(self):
        f = S("x^2 + y^2")
        assert is_reduced_local(f)
        assert milnor_number(f).finite  # cross-check: finite Milnor number

    def test_nonreduced_away_from_origin_is_still_reduced_locally(self):
        # (x - 1)^2 * y has a repeated factor, but not through the origin
        assert is_reduced_local(S("(x-1)*(x-1)*y"))

    def test_prime_field_gcd_criterion(self):
        F7 = prime_field(7)
        assert not is_reduced_local(S("y^2*(y+x^2)", field=F7))
        assert is_reduced_local(S("y^2-x^3", field=F7))
        F3 = prime_field(3)
        assert not is_reduced_local(S("y^3", field=F3))  # a cube in char 3
        F2 = prime_field(2)
        assert not is_reduced_local(S("y^2", field=F2))
        assert is_reduced_local(S("y^2+x^3", field=F2))

    def test_linear_invariance(self, rng):
        cases = ["y^2-x^3", "x*y^2", "y^3", "x^2+y^2", "y^2*(y+x^2)"]
        for i in range(40):
            base = S(cases[i % len(cases)], prec=12)
            expected = is_reduced_local(base)
            images = random_linear_change(rng, ("x", "y"), 12)
            assert is_reduced_local(substitute(base, images)) == expected


class TestTangentCone:
    def test_double_plus_simple(self):
        assert tangent_cone_pattern(S("x*y^2")).tag == DBL

    def test_triple(self):
        assert tangent_cone_pattern(S("y^3")).tag == TRP

    def test_three_distinct(self):
        assert tangent_cone_pattern(S("y^3 + x^2*y")).tag == SQF3

    def test_small_characteristic_rejected(self):
        with pytest.raises(SmallCharacteristicError):
            tangent_cone_pattern(S("y^3", field=prime_field(3)))

    def test_char_five_allowed(self):
        assert tangent_cone_pattern(S("x*y^2", field=prime_field(5))).tag == DBL

    def test_unit_and_linear_invariance(self, rng):
        cases = ["x*y^2", "y^3", "y^3+x^2*y", "x^2*y+y^4", "y^3+x^4"]
        count = 0
        while count < 100:
            base = S(cases[count % len(cases)], prec=14)
            tag = tangent_cone_pattern(base).tag
            u = random_unit(rng, ("x", "y"), 14)
            assert tangent_cone_pattern(u * base).tag == tag
            images = random_linear_change(rng, ("x", "y"), 14)
            assert tangent_cone_pattern(substitute(base, images)).tag == tag
            count += 1


def test_dinfinity_shape_matches_detector(rng):
    """Order-3 non-reduced germs with two distinct tangents are exactly the
    double-line-plus-axis germs, however they are dressed up."""
    from cmtype.classify import classify, BOUNDED_INFINITE

    for i in range(12):
        u = random_unit(rng, ("x", "y"), 16)
        g = S("y", prec=16) + random_polynomial(
            rng, ("x", "y"), 16, min_deg=2, max_deg=3, n_terms=2, nonzero=False)
        h = S("x", prec=16) + random_polynomial(
            rng, ("x", "y"), 16, min_deg=2, max_deg=3, n_terms=2, nonzero=False)
        f = u * g * g * h
        assert not is_reduced_local(f)
        assert tangent_cone_pattern(f).tag == DBL
        report = classify(f)
        assert report.verdict == BOUNDED_INFINITE
        assert report.normal_form == "Dinfinity"
