"""Exact truncated multivariate power series.

A TruncatedSeries stores every coefficient of total degree < precision in
a dict keyed by exponent vectors.  The ``exact`` flag means "all omitted
terms are genuinely zero", i.e. the value is a polynomial; arithmetic
preserves the flag only when no nonzero term was dropped by truncation,
so an exact result can be trusted as a polynomial identity while an
inexact one is an approximation below its precision.

Binary operations require both operands to share variables and field and
output precision min(N_a, N_b).  All values are immutable after
construction and every operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

from .errors import (
    MixedContextError,
    NonLocalSubstitutionError,
    NotAUnitError,
)
from .fields import FieldSpec


@dataclass(frozen=True)
class TruncatedSeries:
    variables: tuple[str, ...]
    field: FieldSpec
    precision: int
    coeffs: dict = dataclass_field(default_factory=dict)
    exact: bool = False

    def __post_init__(self):
        if self.precision < 1:
            raise ValueError("precision must be >= 1")

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero(variables, field, precision, exact=True) -> "TruncatedSeries":
        return TruncatedSeries(tuple(variables), field, precision, {}, exact)

    @staticmethod
    def constant(c, variables, field, precision) -> "TruncatedSeries":
        coeffs = {} if field.is_zero(c) else {(0,) * len(variables): c}
        return TruncatedSeries(tuple(variables), field, precision, coeffs, True)

    @staticmethod
    def one(variables, field, precision) -> "TruncatedSeries":
        return TruncatedSeries.constant(field.one(), variables, field, precision)

    @staticmethod
    def monomial(exponents, c, variables, field, precision) -> "TruncatedSeries":
        variables = tuple(variables)
        exponents = tuple(exponents)
        if len(exponents) != len(variables):
            raise ValueError("exponent vector length mismatch")
        if field.is_zero(c):
            return TruncatedSeries.zero(variables, field, precision)
        if sum(exponents) >= precision:
            # the single term is invisible below this precision
            return TruncatedSeries(variables, field, precision, {}, False)
        return TruncatedSeries(variables, field, precision, {exponents: c}, True)

    @staticmethod
    def variable(name, variables, field, precision) -> "TruncatedSeries":
        variables = tuple(variables)
        e = tuple(1 if v == name else 0 for v in variables)
        if sum(e) != 1:
            raise ValueError(f"{name!r} is not among {variables}")
        return TruncatedSeries.monomial(e, field.one(), variables, field, precision)

    @staticmethod
    def from_terms(terms, variables, field, precision) -> "TruncatedSeries":
        """Build from an iterable of (exponent tuple, coefficient); terms of
        degree >= precision are dropped and clear the exact flag."""
        coeffs: dict = {}
        dropped = False
        for e, c in terms:
            e = tuple(e)
            if field.is_zero(c):
                continue
            if sum(e) >= precision:
                dropped = True
                continue
            acc = field.add(coeffs.get(e, field.zero()), c)
            if field.is_zero(acc):
                coeffs.pop(e, None)
            else:
                coeffs[e] = acc
        return TruncatedSeries(tuple(variables), field, precision, coeffs, not dropped)

    # -- inspection ------------------------------------------------------

    def is_zero(self) -> bool:
        """No stored terms below precision (exactly zero iff also exact)."""
        return not self.coeffs

    def constant_term(self):
        return self.coeffs.get((0,) * len(self.variables), self.field.zero())

    def is_unit(self) -> bool:
        return not self.field.is_zero(self.constant_term())

    def order(self) -> int | None:
        """Least total degree of a stored term; None when no term is stored."""
        if not self.coeffs:
            return None
        return min(sum(e) for e in self.coeffs)

    def homogeneous_part(self, d: int) -> "TruncatedSeries":
        coeffs = {e: c for e, c in self.coeffs.items() if sum(e) == d}
        return TruncatedSeries(self.variables, self.field, self.precision, coeffs, self.exact)

    def leading_form(self) -> "TruncatedSeries":
        d = self.order()
        if d is None:
            return TruncatedSeries.zero(self.variables, self.field, self.precision, self.exact)
        return self.homogeneous_part(d)

    def total_degree(self) -> int:
        """Largest stored degree (0 for the zero series)."""
        if not self.coeffs:
            return 0
        return max(sum(e) for e in self.coeffs)

    def coefficient(self, exponents):
        return self.coeffs.get(tuple(exponents), self.field.zero())

    # -- context helpers -------------------------------------------------

    def _check_context(self, other: "TruncatedSeries"):
        if self.variables != other.variables or self.field != other.field:
            raise MixedContextError(
                f"mixed contexts: {self.variables}/{self.field} vs "
                f"{other.variables}/{other.field}")

    def truncate(self, precision: int) -> "TruncatedSeries":
        if precision == self.precision:
            return self
        if precision > self.precision:
            # raising precision is only legitimate for exact values
            if not self.exact:
                raise ValueError("cannot raise the precision of an inexact series")
            return TruncatedSeries(self.variables, self.field, precision, dict(self.coeffs), True)
        coeffs = {e: c for e, c in self.coeffs.items() if sum(e) < precision}
        exact = self.exact and len(coeffs) == len(self.coeffs)
        return TruncatedSeries(self.variables, self.field, precision, coeffs, exact)

    def with_exact(self, exact: bool) -> "TruncatedSeries":
        return TruncatedSeries(self.variables, self.field, self.precision, dict(self.coeffs), exact)

    # -- ring operations -------------------------------------------------

    def __neg__(self) -> "TruncatedSeries":
        neg = self.field.neg
        coeffs = {e: neg(c) for e, c in self.coeffs.items()}
        return TruncatedSeries(self.variables, self.field, self.precision, coeffs, self.exact)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_context(other)
        prec = min(self.precision, other.precision)
        fld = self.field
        coeffs = dict(self.coeffs)
        for e, c in other.coeffs.items():
            acc = fld.add(coeffs.get(e, fld.zero()), c)
            if fld.is_zero(acc):
                coeffs.pop(e, None)
            else:
                coeffs[e] = acc
        dropped = False
        for e in list(coeffs):
            if sum(e) >= prec:
                del coeffs[e]
                dropped = True
        exact = self.exact and other.exact and not dropped
        return TruncatedSeries(self.variables, self.field, prec, coeffs, exact)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def scale(self, c) -> "TruncatedSeries":
        fld = self.field
        if fld.is_zero(c):
            return TruncatedSeries.zero(self.variables, fld, self.precision, self.exact)
        coeffs = {e: fld.mul(v, c) for e, v in self.coeffs.items()}
        return TruncatedSeries(self.variables, fld, self.precision, coeffs, self.exact)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_context(other)
        prec = min(self.precision, other.precision)
        fld = self.field
        # exactly-zero factor short-circuits regardless of the other operand
        if (self.exact and not self.coeffs) or (other.exact and not other.coeffs):
            return TruncatedSeries.zero(self.variables, fld, prec)
        coeffs: dict = {}
        dropped = False
        add, mul, is_zero = fld.add, fld.mul, fld.is_zero
        for e1, c1 in self.coeffs.items():
            d1 = sum(e1)
            for e2, c2 in other.coeffs.items():
                if d1 + sum(e2) >= prec:
                    dropped = True
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                acc = add(coeffs.get(e, 0), mul(c1, c2))
                if is_zero(acc):
                    coeffs.pop(e, None)
                else:
                    coeffs[e] = acc
        exact = self.exact and other.exact and not dropped
        return TruncatedSeries(self.variables, fld, prec, coeffs, exact)

    def __pow__(self, n: int) -> "TruncatedSeries":
        if n < 0:
            raise ValueError("negative power of a series")
        result = TruncatedSeries.one(self.variables, self.field, self.precision)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def derivative(self, var: str) -> "TruncatedSeries":
        """Partial derivative.  Exact inputs keep their precision; inexact
        inputs lose one degree of certainty."""
        i = self.variables.index(var)
        fld = self.field
        prec = self.precision if self.exact else max(1, self.precision - 1)
        coeffs = {}
        for e, c in self.coeffs.items():
            if e[i] == 0:
                continue
            d = fld.mul(c, fld.from_int(e[i]))
            if fld.is_zero(d):
                continue
            e2 = e[:i] + (e[i] - 1,) + e[i + 1:]
            coeffs[e2] = d
        return TruncatedSeries(self.variables, fld, prec, coeffs, self.exact)

    # -- comparisons -----------------------------------------------------

    def same_below(self, other: "TruncatedSeries", upto: int | None = None) -> bool:
        """Coefficientwise agreement on all degrees < upto (default: the
        common precision)."""
        self._check_context(other)
        bound = min(self.precision, other.precision)
        if upto is not None:
            bound = min(bound, upto)
        for e, c in self.coeffs.items():
            if sum(e) < bound and other.coeffs.get(e, self.field.zero()) != c:
                return False
        for e, c in other.coeffs.items():
            if sum(e) < bound and e not in self.coeffs:
                return False
        return True

    # -- variable surgery -------------------------------------------------

    def extend_variables(self, variables) -> "TruncatedSeries":
        """Reinterpret in a larger variable context (new variables get
        exponent zero)."""
        variables = tuple(variables)
        pos = []
        for v in self.variables:
            if v not in variables:
                raise MixedContextError(f"variable {v!r} missing from target context")
            pos.append(variables.index(v))
        n = len(variables)
        coeffs = {}
        for e, c in self.coeffs.items():
            e2 = [0] * n
            for p, a in zip(pos, e):
                e2[p] = a
            coeffs[tuple(e2)] = c
        return TruncatedSeries(variables, self.field, self.precision, coeffs, self.exact)

    def drop_variable(self, var: str) -> "TruncatedSeries":
        """Remove an unused variable from the context."""
        i = self.variables.index(var)
        for e in self.coeffs:
            if e[i] != 0:
                raise MixedContextError(f"series still involves {var!r}")
        variables = self.variables[:i] + self.variables[i + 1:]
        coeffs = {e[:i] + e[i + 1:]: c for e, c in self.coeffs.items()}
        return TruncatedSeries(variables, self.field, self.precision, coeffs, self.exact)

    # -- printing ----------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        fld = self.field
        parts = []
        for e in sorted(self.coeffs, key=lambda e: (sum(e), e)):
            c = self.coeffs[e]
            factors = []
            for v, a in zip(self.variables, e):
                if a == 1:
                    factors.append(v)
                elif a > 1:
                    factors.append(f"{v}^{a}")
            cs = fld.element_str(c)
            if factors and cs == "1":
                parts.append("*".join(factors))
            elif factors and cs == "-1":
                parts.append("-" + "*".join(factors))
            else:
                parts.append("*".join([cs] + factors))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


# -- free functions matching the operation contracts ------------------------


def mul_series(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def add_series(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def invert_unit(a: TruncatedSeries) -> TruncatedSeries:
    """Inverse of a unit, computed degree by degree on homogeneous parts.

    The result is exact only for constant inputs; otherwise it is an honest
    truncation of the full inverse.
    """
    if not a.is_unit():
        raise NotAUnitError("series has zero constant term")
    fld = a.field
    prec = a.precision
    c0 = a.constant_term()
    c0_inv = fld.inv(c0)
    if len(a.coeffs) == 1:
        # constant: inverse is the constant inverse, still a polynomial
        result = TruncatedSeries.constant(c0_inv, a.variables, fld, prec)
        return result if a.exact else result.with_exact(False)
    # split into homogeneous pieces a = c0 + a_1 + a_2 + ...
    by_degree: dict[int, dict] = {}
    for e, c in a.coeffs.items():
        d = sum(e)
        if d > 0:
            by_degree.setdefault(d, {})[e] = c
    a_parts = {
        d: TruncatedSeries(a.variables, fld, prec, coeffs, False)
        for d, coeffs in by_degree.items()
    }
    b_parts: dict[int, TruncatedSeries] = {
        0: TruncatedSeries.constant(c0_inv, a.variables, fld, prec)
    }
    for d in range(1, prec):
        acc = TruncatedSeries.zero(a.variables, fld, prec, exact=False)
        for j, aj in a_parts.items():
            if j <= d and (d - j) in b_parts:
                acc = acc + aj * b_parts[d - j]
        bd = (-acc).scale(c0_inv)
        if bd.coeffs:
            b_parts[d] = bd
    coeffs: dict = {}
    for part in b_parts.values():
        coeffs.update(part.coeffs)
    return TruncatedSeries(a.variables, fld, prec, coeffs, False)


def substitute(a: TruncatedSeries, images: dict) -> TruncatedSeries:
    """Local substitution: every image must have zero constant term.

    Unmentioned variables map to themselves; all images must live in one
    common context, which becomes the context of the result.
    """
    if not images:
        return a
    fld = a.field
    sample = next(iter(images.values()))
    target_vars = sample.variables
    prec = min([a.precision] + [img.precision for img in images.values()])
    full_images = {}
    for v in a.variables:
        if v in images:
            img = images[v]
            if img.field != fld or img.variables != target_vars:
                raise MixedContextError("substitution images disagree on context")
            if not fld.is_zero(img.constant_term()):
                raise NonLocalSubstitutionError(
                    f"image of {v!r} has nonzero constant term")
            full_images[v] = img.truncate(min(prec, img.precision))
        else:
            if v not in target_vars:
                raise MixedContextError(
                    f"variable {v!r} absent from substitution target context")
            full_images[v] = TruncatedSeries.variable(v, target_vars, fld, prec)
    result = TruncatedSeries.zero(target_vars, fld, prec)
    # cache powers of each image
    powers: dict[str, list[TruncatedSeries]] = {
        v: [TruncatedSeries.one(target_vars, fld, prec)] for v in a.variables
    }

    def power(v: str, n: int) -> TruncatedSeries:
        cache = powers[v]
        while len(cache) <= n:
            cache.append(cache[-1] * full_images[v])
        return cache[n]

    exact_in = a.exact
    for e in sorted(a.coeffs, key=lambda e: (sum(e), e)):
        term = TruncatedSeries.constant(a.coeffs[e], target_vars, fld, prec)
        for v, n in zip(a.variables, e):
            if n:
                term = term * power(v, n)
        result = result + term
    if not exact_in:
        result = result.with_exact(False)
    return result


def jet_order(a: TruncatedSeries):
    """(order, leading_form) with order None when no term is stored below
    precision: for exact input that means the zero polynomial (order
    "infinite"); for inexact input the order is merely above precision."""
    d = a.order()
    if d is None:
        return JetOrder(order=None, above_precision=not a.exact,
                        leading_form=TruncatedSeries.zero(a.variables, a.field,
                                                          a.precision, a.exact))
    return JetOrder(order=d, above_precision=False, leading_form=a.homogeneous_part(d))


@dataclass(frozen=True)
class JetOrder:
    order: int | None
    above_precision: bool
    leading_form: TruncatedSeries

    @property
    def is_zero_polynomial(self) -> bool:
        return self.order is None and not self.above_precision
