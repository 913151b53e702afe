"""Singularity-theoretic invariants of a germ.

split_quadratic iterates completing the square: pick a variable whose
square occurs in the leading quadratic form (after a linear change if
only cross terms exist, always possible away from characteristic 2),
Weierstrass-prepare to degree 2 in it, and shift to kill the linear
coefficient.  Each round trades one variable for a residual germ; the
loop stops with a plane-curve germ in two variables.

milnor_number certifies the jet dimension of k[[x,y]]/(f_x, f_y) by a
Nakayama closure test: once every monomial of some degree D lies in the
span of the truncated partial multiples modulo degree D+1, the span
contains the whole power m^D and the quotient dimension is exact.

is_reduced_local and tangent_cone_pattern decide the local reducedness
and the root pattern of a cubic leading form without factoring over an
extension field.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

from . import polyutil
from .errors import (
    CharacteristicTwoError,
    NotOrderTwoError,
    PrecisionInsufficientError,
    SmallCharacteristicError,
    UnsupportedCharacteristicError,
)
from .jets import MonomialIndex, RowSpace, monomials_of_degree, series_vector
from .series import TruncatedSeries, substitute
from .weierstrass import weierstrass_prepare

SQF3 = "SQF3"  # three distinct projective roots
DBL = "DBL"    # a double root plus a distinct simple root
TRP = "TRP"    # a triple root


# ---------------------------------------------------------------------------
# completing the square


@dataclass(frozen=True)
class SplitStep:
    """One round of splitting: optional linear pre-substitutions, the
    variable eliminated, the Weierstrass data used to complete the square."""

    presubs: tuple  # pairs (v_i, v_j) meaning v_i -> v_i + v_j
    var: str
    unit: TruncatedSeries
    b1: TruncatedSeries
    verified: bool


@dataclass
class SplitResult:
    residual: TruncatedSeries
    squares_split: int
    change_log: list = dataclass_field(default_factory=list)
    steps: list = dataclass_field(default_factory=list)

    @property
    def verified(self) -> bool:
        return all(s.verified for s in self.steps)


def _find_square_variable(f: TruncatedSeries):
    """Variable whose square occurs in the leading quadratic form, scanning
    from the last variable down; None if only cross terms exist."""
    form = f.homogeneous_part(2)
    n = len(f.variables)
    for i in range(n - 1, -1, -1):
        e = tuple(2 if j == i else 0 for j in range(n))
        if e in form.coeffs:
            return i
    return None


def _find_cross_term(f: TruncatedSeries):
    """First cross term x_i x_j of the leading quadratic form, scanning j
    from the last variable down and i upward."""
    form = f.homogeneous_part(2)
    n = len(f.variables)
    for j in range(n - 1, -1, -1):
        for i in range(n):
            if i == j:
                continue
            e = tuple(1 if k in (i, j) else 0 for k in range(n))
            if e in form.coeffs:
                return i, j
    return None


def split_one_square(f: TruncatedSeries):
    """Split a single square off an order-2 germ; returns (residual in one
    fewer variable, SplitStep)."""
    fld = f.field
    if fld.characteristic == 2:
        raise CharacteristicTwoError("completing the square needs characteristic != 2")
    if f.order() != 2:
        raise NotOrderTwoError(f"germ has order {f.order()}, expected 2")
    presubs = []
    i = _find_square_variable(f)
    if i is None:
        cross = _find_cross_term(f)
        if cross is None:
            raise NotOrderTwoError("no quadratic part found")
        ci, cj = cross
        vi, vj = f.variables[ci], f.variables[cj]
        images = {
            vi: TruncatedSeries.variable(vi, f.variables, fld, f.precision)
            + TruncatedSeries.variable(vj, f.variables, fld, f.precision)
        }
        f = substitute(f, images)
        presubs.append((vi, vj))
        i = cj
    var = f.variables[i]
    w = weierstrass_prepare(f, var)
    b1, b2 = w.coefficients
    quarter = fld.inv(fld.from_int(4))
    residual = b2 - (b1 * b1).scale(quarter)
    # round-trip check: unit*(var^2 + b1 var + b2) must reproduce f
    verified = w.reconstruct().same_below(f)
    step = SplitStep(presubs=tuple(presubs), var=var, unit=w.unit, b1=b1,
                     verified=verified)
    return residual, step


def split_quadratic(f: TruncatedSeries, stop_at: int = 2) -> SplitResult:
    """Split squares until `stop_at` variables remain (or the residual no
    longer has order 2, which the classifier handles case by case)."""
    if len(f.variables) < 3:
        raise NotOrderTwoError("split_quadratic expects at least three variables")
    if f.order() != 2:
        raise NotOrderTwoError(f"germ has order {f.order()}, expected 2")
    result = SplitResult(residual=f, squares_split=0)
    cur = f
    while len(cur.variables) > stop_at and cur.order() == 2:
        cur, step = split_one_square(cur)
        result.steps.append(step)
        result.squares_split += 1
        for vi, vj in step.presubs:
            result.change_log.append(f"substitute {vi} -> {vi} + {vj}")
        result.change_log.append(
            f"split {step.var}: {step.var} -> {step.var} - (b1/2), "
            f"residual in ({', '.join(cur.variables)})")
    result.residual = cur
    return result


# ---------------------------------------------------------------------------
# Milnor number


@dataclass(frozen=True)
class MilnorNumber:
    finite: bool
    value: int | None
    certified: bool

    def __repr__(self):
        if not self.finite:
            return "MilnorNumber(infinite)"
        return f"MilnorNumber({self.value}, certified={self.certified})"


def milnor_number(f: TruncatedSeries) -> MilnorNumber:
    """Certified jet computation of dim_k k[[x,y]]/(f_x, f_y).

    Certification: a degree D such that every degree-D monomial lies in the
    span of the truncated partial multiples below degree D+1; Nakayama then
    closes m^D inside the Jacobian ideal and the quotient dimension is the
    exact Milnor number.  Exact non-reduced input short-circuits to the
    infinite flag via the reducedness test.
    """
    if len(f.variables) != 2:
        raise ValueError("Milnor number is computed for plane-curve germs")
    if f.exact and f.is_zero():
        raise ValueError("zero germ")
    if f.exact:
        try:
            if not is_reduced_local(f):
                return MilnorNumber(finite=False, value=None, certified=True)
        except UnsupportedCharacteristicError:
            pass
    fx = f.derivative(f.variables[0])
    fy = f.derivative(f.variables[1])
    cap = f.precision - 2
    fld = f.field
    for d_cert in range(1, cap + 1):
        idx = MonomialIndex(2, d_cert + 1)
        span = RowSpace(fld)
        for g in (fx, fy):
            gt = g.truncate(min(g.precision, d_cert + 1))
            order = gt.order()
            if order is None:
                continue
            for m_deg in range(0, d_cert + 1 - order):
                for m in monomials_of_degree(2, m_deg):
                    vec = {}
                    for e, c in gt.coeffs.items():
                        shifted = (e[0] + m[0], e[1] + m[1])
                        if sum(shifted) <= d_cert:
                            i = idx.index(shifted)
                            acc = fld.add(vec.get(i, fld.zero()), c)
                            if fld.is_zero(acc):
                                vec.pop(i, None)
                            else:
                                vec[i] = acc
                    if vec:
                        span.insert(vec)
        top_ok = all(
            span.contains({idx.index(m): fld.one()})
            for m in monomials_of_degree(2, d_cert)
        )
        if top_ok:
            mu = len(idx) - span.rank
            return MilnorNumber(finite=True, value=mu, certified=True)
    raise PrecisionInsufficientError(
        "no Nakayama certificate below the working precision",
        suggested=2 * f.precision)


# ---------------------------------------------------------------------------
# local reducedness


def _to_sympy(f: TruncatedSeries):
    import sympy

    syms = sympy.symbols(" ".join(f.variables))
    if len(f.variables) == 1:
        syms = (syms,)
    expr = sympy.Integer(0)
    for e, c in f.coeffs.items():
        if f.field.characteristic == 0:
            coeff = sympy.Rational(c.numerator, c.denominator)
        else:
            coeff = sympy.Integer(int(c))
        term = coeff
        for s, a in zip(syms, e):
            if a:
                term *= s ** a
        expr += term
    return expr, syms


def is_reduced_local(f: TruncatedSeries) -> bool:
    """True iff f has no repeated non-unit factor in k[[x,y]].

    Char 0: squarefree decomposition; a repeated local factor exists iff
    some factor with exponent >= 2 vanishes at the origin (k[x,y] local
    rings are excellent, so polynomial and analytic reducedness agree).
    Char p: gcd(f, f_x, f_y) is nonconstant exactly on the repeated locus
    (F_p is perfect), and the repeated part passes through the origin iff
    the gcd vanishes there.
    """
    if not f.exact:
        raise ValueError("reducedness test needs a polynomial-backed series")
    if f.is_zero():
        raise ValueError("zero germ")
    if f.order() == 0:
        return True
    import sympy

    expr, syms = _to_sympy(f)
    origin = {s: 0 for s in syms}
    if f.field.characteristic == 0:
        _, factors = sympy.sqf_list(sympy.Poly(expr, *syms, domain="QQ"))
        for g, mult in factors:
            if mult >= 2 and sympy.sympify(g).as_expr().subs(origin) == 0:
                return False
        return True
    p = f.field.characteristic
    try:
        fp = sympy.Poly(expr, *syms, modulus=p)
        g = sympy.gcd(fp, sympy.Poly(fp.diff(syms[0]), *syms, modulus=p))
        g = sympy.gcd(g, sympy.Poly(fp.diff(syms[1]), *syms, modulus=p))
        g_at_origin = g.as_expr().subs(origin)
    except Exception as exc:  # pragma: no cover - sympy capability escape hatch
        raise UnsupportedCharacteristicError(
            f"squarefree analysis unavailable in characteristic {p}: {exc}") from exc
    return int(g_at_origin) % p != 0


# ---------------------------------------------------------------------------
# tangent cone pattern


@dataclass(frozen=True)
class TangentConePattern:
    tag: str  # SQF3 | DBL | TRP


def _binary_form(form: TruncatedSeries):
    """(y-multiplicity, dehomogenized coefficient list) of a nonzero binary
    form; the list is p(t) = form(t, 1)."""
    d = form.order()
    coeffs = [form.field.zero()] * (d + 1)
    for e, c in form.coeffs.items():
        coeffs[e[0]] = c
    poly = polyutil.trim(coeffs)
    return d - polyutil.deg(poly), poly


def tangent_cone_pattern(f: TruncatedSeries) -> TangentConePattern:
    """Root-multiplicity pattern of the cubic leading form over the
    algebraic closure, read off gcd degrees with the partials."""
    p = f.field.characteristic
    if p in (2, 3):
        raise SmallCharacteristicError(
            "tangent cone analysis needs characteristic 0 or p > 3")
    if len(f.variables) != 2:
        raise ValueError("tangent cone pattern is defined for plane-curve germs")
    if f.order() != 3:
        raise ValueError(f"germ has order {f.order()}, expected 3")
    form = f.leading_form()
    fld = f.field
    pieces = []
    for g in (form, form.derivative(f.variables[0]), form.derivative(f.variables[1])):
        if g.is_zero():
            continue
        pieces.append(_binary_form(g))
    ymult, poly = pieces[0]
    for ym2, poly2 in pieces[1:]:
        ymult = min(ymult, ym2)
        poly = polyutil.gcd(poly, poly2, fld)
    gdeg = ymult + polyutil.deg(poly)
    if gdeg <= 0:
        return TangentConePattern(SQF3)
    if gdeg == 1:
        return TangentConePattern(DBL)
    if gdeg == 2:
        return TangentConePattern(TRP)
    raise SmallCharacteristicError("degenerate gcd; characteristic too small")
