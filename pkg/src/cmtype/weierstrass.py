"""Weierstrass division and preparation on truncated series.

Division is solved degree by degree: writing everything in homogeneous
parts, the degree-m equation g_m = sum_j q_j f_{m-j} + r_m determines the
new quotient part q_{m-e} and remainder part r_m uniquely, because a
homogeneous P splits uniquely as Q*F_e + R with deg_var(R) < e (F_e is
the leading form; its var^e coefficient is a nonzero constant by
regularity, so Q is read off by descending var-degree).  Every produced
coefficient only uses known jets, so the quotient is the truncation of
the true quotient below precision - e and the remainder is true below
the full precision.

Preparation divides var^e by f; the quotient is a unit whose inverse is
the Weierstrass unit, and the remainder supplies the non-unit
coefficients of the distinguished polynomial.  Exact (polynomial) inputs
are internally recomputed at a raised precision so that all reported
coefficients are good to the full requested precision.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotRegularError, PrecisionInsufficientError
from .series import TruncatedSeries, invert_unit


def axis_order(f: TruncatedSeries, var: str) -> int | None:
    """Order of f restricted to the var-axis (all other variables set to 0);
    None when the restriction vanishes below precision."""
    i = f.variables.index(var)
    best = None
    for e, _ in f.coeffs.items():
        if all(a == 0 for j, a in enumerate(e) if j != i):
            if best is None or e[i] < best:
                best = e[i]
    return best


def _homogeneous_parts(f: TruncatedSeries) -> dict:
    parts: dict = {}
    for e, c in f.coeffs.items():
        parts.setdefault(sum(e), {})[e] = c
    return {
        d: TruncatedSeries(f.variables, f.field, f.precision, coeffs, f.exact)
        for d, coeffs in parts.items()
    }


def _var_degree_part(p: TruncatedSeries, i: int, vd: int) -> TruncatedSeries:
    coeffs = {e: c for e, c in p.coeffs.items() if e[i] == vd}
    return TruncatedSeries(p.variables, p.field, p.precision, coeffs, p.exact)


def _absorb_leading_form(p: TruncatedSeries, form: TruncatedSeries, i: int,
                         e: int, c_lead):
    """Unique split p = Q*form + R with deg_var(R) < e, for homogeneous p of
    degree m and the degree-e leading form with var^e coefficient c_lead."""
    fld = p.field
    q_acc = TruncatedSeries.zero(p.variables, fld, p.precision, p.exact)
    rest = p
    m = p.order()
    if m is None:
        return q_acc, rest
    inv = fld.inv(c_lead)
    for vd in range(m, e - 1, -1):
        part = _var_degree_part(rest, i, vd)
        if part.is_zero():
            continue
        shifted = {
            exp[:i] + (exp[i] - e,) + exp[i + 1:]: fld.mul(c, inv)
            for exp, c in part.coeffs.items()
        }
        q_part = TruncatedSeries(p.variables, fld, p.precision, shifted, part.exact)
        q_acc = q_acc + q_part
        rest = rest - q_part * form
    return q_acc, rest


def weierstrass_divide(g: TruncatedSeries, f: TruncatedSeries, var: str):
    """Divide g by f, which must be var-regular of axis order e:
    g = q*f + r below precision, deg_var(r) < e.  The quotient is certified
    below precision - e, the remainder below the full precision.
    Returns (q, r, e)."""
    g._check_context(f)
    i = f.variables.index(var)
    e = axis_order(f, var)
    if e is None:
        raise NotRegularError(
            f"series vanishes identically on the {var}-axis below precision")
    prec = min(g.precision, f.precision)
    if e >= prec:
        raise PrecisionInsufficientError(
            f"axis order {e} is not certified below precision {prec}",
            suggested=2 * prec)
    fld = f.field
    f_parts = _homogeneous_parts(f.truncate(prec) if f.precision != prec else f)
    g_parts = _homogeneous_parts(g.truncate(prec) if g.precision != prec else g)
    form = f_parts.get(e)
    if form is None:
        raise NotRegularError(f"no degree-{e} leading form")
    lead_exp = tuple(e if j == i else 0 for j in range(len(f.variables)))
    c_lead = form.coeffs.get(lead_exp)
    if c_lead is None or fld.is_zero(c_lead):
        raise NotRegularError(
            f"leading form has no {var}^{e} term; apply a linear change first")
    zero = TruncatedSeries.zero(f.variables, fld, prec, exact=f.exact and g.exact)
    q_parts: dict = {}
    r_parts: dict = {}
    for m in range(prec):
        rhs = g_parts.get(m, zero)
        for j in sorted(q_parts):
            if j > m - e:
                break
            fp = f_parts.get(m - j)
            if fp is not None and not q_parts[j].is_zero():
                rhs = rhs - q_parts[j] * fp
        if m < e:
            if not rhs.is_zero():
                r_parts[m] = rhs
            continue
        q_m, r_m = _absorb_leading_form(rhs, form, i, e, c_lead)
        if not q_m.is_zero():
            q_parts[m - e] = q_m
        if not r_m.is_zero():
            r_parts[m] = r_m
    # the outputs are certified polynomials when the recursion has provably
    # reached its zero tail: with f and g exact, once a full window of
    # deg(f) - e + 1 consecutive top quotient parts vanishes, every later
    # part vanishes too and q, r are the true (finite) division data
    tail_exact = False
    if f.exact and g.exact:
        window = max(f_parts) - e + 1
        tail_exact = all(j not in q_parts
                         for j in range(max(0, prec - e - window), prec - e))
    q_coeffs: dict = {}
    for part in q_parts.values():
        q_coeffs.update(part.coeffs)
    r_coeffs: dict = {}
    for part in r_parts.values():
        r_coeffs.update(part.coeffs)
    q = TruncatedSeries(f.variables, fld, max(prec - e, 1),
                        {k: v for k, v in q_coeffs.items() if sum(k) < prec - e},
                        tail_exact)
    r = TruncatedSeries(f.variables, fld, prec, r_coeffs, tail_exact)
    return q, r, e


@dataclass(frozen=True)
class WeierstrassData:
    """f = unit * (var^e + b_1 var^{e-1} + ... + b_e), all below the unit's
    precision."""

    unit: TruncatedSeries
    coefficients: list  # b_1, ..., b_e in the remaining variables
    degree: int
    var: str

    def distinguished_polynomial(self, variables, precision) -> TruncatedSeries:
        """var^e + sum b_i var^{e-i} re-extended to the given context."""
        fld = self.unit.field
        v = TruncatedSeries.variable(self.var, variables, fld, precision)
        acc = v ** self.degree
        for k, b in enumerate(self.coefficients, start=1):
            term = b.extend_variables(variables) * v ** (self.degree - k)
            acc = acc + term
        return acc

    def reconstruct(self) -> TruncatedSeries:
        poly = self.distinguished_polynomial(self.unit.variables, self.unit.precision)
        return self.unit * poly


def weierstrass_prepare(f: TruncatedSeries, var: str) -> WeierstrassData:
    """Weierstrass preparation with respect to `var`.

    Requires var-regularity of minimal order: the axis order e must equal
    ord(f), which is how the preparation is used throughout (the splitting
    loop always picks a variable whose square occurs in the leading form).
    For exact inputs every output coefficient is good to f's precision;
    for inexact inputs the unit is certified below precision - e and each
    b_i below precision - e + i.
    """
    i = f.variables.index(var)
    e = axis_order(f, var)
    if e is None:
        raise NotRegularError(
            f"series vanishes identically on the {var}-axis below precision")
    total_order = f.order()
    if total_order is None or e != total_order:
        raise NotRegularError(
            f"axis order {e} differs from total order {total_order}; "
            "apply a linear change of variables first")
    target_prec = f.precision
    work = f.truncate(target_prec + e) if f.exact else f
    prec = work.precision
    v_monomial = TruncatedSeries.monomial(
        tuple(e if j == i else 0 for j in range(len(f.variables))),
        f.field.one(), f.variables, f.field, prec)
    q, r, _ = weierstrass_divide(v_monomial, work, var)
    if not q.is_unit():
        raise NotRegularError("division quotient is not a unit")
    unit = invert_unit(q)
    # v^e = q f + r, so f = q^{-1}(v^e - r); read the b_i off -r
    coefficients = []
    for k in range(1, e + 1):
        want = e - k
        coeffs = {}
        for exps, c in r.coeffs.items():
            if exps[i] == want:
                coeffs[exps[:i] + (0,) + exps[i + 1:]] = f.field.neg(c)
        b_prec = min(target_prec, r.precision - (e - k)) if not f.exact \
            else target_prec
        b = TruncatedSeries(f.variables, f.field, r.precision, coeffs, r.exact)
        b = b.drop_variable(var).truncate(min(b_prec, r.precision))
        if b.is_unit():
            raise NotRegularError(
                f"coefficient b_{k} is a unit; f is not regular of minimal order")
        coefficients.append(b)
    unit_prec = target_prec if f.exact else max(1, target_prec - e)
    unit = unit.truncate(min(unit_prec, unit.precision))
    return WeierstrassData(unit=unit, coefficients=coefficients, degree=e, var=var)
