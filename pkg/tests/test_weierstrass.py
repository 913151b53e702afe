from __future__ import annotations

import pytest

from cmtype.errors import NotRegularError
from cmtype.fields import QQ
from cmtype.parser import parse_series
from cmtype.series import TruncatedSeries
from cmtype.weierstrass import axis_order, weierstrass_divide, weierstrass_prepare

from conftest import S, random_polynomial, random_unit


def test_already_distinguished():
    w = weierstrass_prepare(S("y^2 + x^3"), "y")
    assert w.degree == 2
    assert w.unit.same_below(S("1"))
    assert w.coefficients[0].is_zero()
    assert w.coefficients[1].same_below(parse_series("x^3", ["x"], QQ, 12))


def test_unit_factor_recovered():
    f = S("(1+x)*(y^2+x^3)")
    w = weierstrass_prepare(f, "y")
    assert w.degree == 2
    assert w.unit.same_below(S("1+x"))
    assert w.coefficients[0].is_zero()
    assert w.coefficients[1].same_below(parse_series("x^3", ["x"], QQ, 12))
    assert w.reconstruct().same_below(f)


def test_not_regular_on_axis():
    with pytest.raises(NotRegularError):
        weierstrass_prepare(S("x*y"), "y")


def test_not_minimal_order_rejected():
    # axis order 3 exceeds the total order 2
    with pytest.raises(NotRegularError):
        weierstrass_prepare(S("y^3 + x^2"), "y")


def test_axis_order():
    assert axis_order(S("y^2 + x*y + x^3"), "y") == 2
    assert axis_order(S("x*y"), "y") is None


def test_division_identity():
    f = S("y^2 + x^3", prec=10)
    g = S("y^3 + x*y", prec=10)
    q, r, e = weierstrass_divide(g, f, "y")
    assert e == 2
    # remainder has y-degree < 2
    assert all(exp[1] < 2 for exp in r.coeffs)
    assert (q * f + r).same_below(g)


def test_roundtrip_corpus(rng):
    variables = ("x", "y")
    done = 0
    while done < 50:
        e = rng.randint(1, 4)
        prec = 12
        u = random_unit(rng, variables, prec)
        y = TruncatedSeries.variable("y", variables, QQ, prec)
        poly = y ** e
        for i in range(1, e + 1):
            b = random_polynomial(rng, ("x",), prec, min_deg=i, max_deg=i + 2,
                                  n_terms=2, nonzero=False)
            poly = poly + b.extend_variables(variables) * y ** (e - i)
        f = u * poly
        if f.order() != e or axis_order(f, "y") != e:
            continue
        w = weierstrass_prepare(f, "y")
        assert w.degree == e
        assert w.reconstruct().same_below(f)
        for b in w.coefficients:
            assert not b.is_unit()
        done += 1


def test_precision_monotonicity_of_preparation(rng):
    done = 0
    while done < 50:
        f_hi = random_polynomial(rng, ("x", "y"), 14, min_deg=2, max_deg=4,
                                 n_terms=4)
        if axis_order(f_hi, "y") != f_hi.order() or f_hi.order() is None \
                or f_hi.order() < 1:
            continue
        f_lo = f_hi.truncate(9)
        try:
            w_hi = weierstrass_prepare(f_hi, "y")
            w_lo = weierstrass_prepare(f_lo, "y")
        except NotRegularError:
            continue
        assert w_hi.unit.same_below(w_lo.unit, upto=9)
        for bh, bl in zip(w_hi.coefficients, w_lo.coefficients):
            assert bh.same_below(bl, upto=9)
        done += 1
