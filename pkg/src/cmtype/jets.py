"""Jet-level views of polynomial and quotient rings.

A MonomialIndex enumerates exponent vectors of total degree < bound in
degree-then-lex order, giving every truncated series a sparse coefficient
vector.  JetRing models k[x_1..x_n]/(f) below a fixed precision: its
ideal row space is spanned by the truncated monomial multiples of f, and
reducing a coefficient vector against it yields canonical coordinates.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from .fields import FieldSpec
from .linalg import RowSpace
from .series import TruncatedSeries


def monomials_of_degree(nvars: int, d: int):
    """Exponent tuples of total degree d in lex order."""
    if nvars == 1:
        yield (d,)
        return
    for bars in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for b in bars:
            e[b] += 1
        yield tuple(e)


class MonomialIndex:
    """Bijection exponent-tuple <-> integer for total degree < bound."""

    def __init__(self, nvars: int, bound: int):
        self.nvars = nvars
        self.bound = bound
        self.exponents: list[tuple[int, ...]] = []
        for d in range(bound):
            self.exponents.extend(sorted(monomials_of_degree(nvars, d)))
        self.lookup = {e: i for i, e in enumerate(self.exponents)}

    def __len__(self) -> int:
        return len(self.exponents)

    def index(self, e) -> int:
        return self.lookup[tuple(e)]

    def exponent(self, i: int) -> tuple[int, ...]:
        return self.exponents[i]

    def of_degree_at_most(self, d: int):
        return [e for e in self.exponents if sum(e) <= d]


def series_vector(f: TruncatedSeries, idx: MonomialIndex) -> dict:
    """Sparse coefficient vector of f on the index (terms outside are
    silently ignored; callers choose bounds accordingly)."""
    vec = {}
    for e, c in f.coeffs.items():
        i = idx.lookup.get(e)
        if i is not None:
            vec[i] = c
    return vec


def vector_series(vec: dict, idx: MonomialIndex, variables, field: FieldSpec,
                  precision: int) -> TruncatedSeries:
    coeffs = {idx.exponent(i): c for i, c in vec.items() if not field.is_zero(c)}
    return TruncatedSeries(tuple(variables), field, precision, coeffs, False)


def monomial_multiples(g: TruncatedSeries, idx: MonomialIndex, min_deg: int = 0):
    """Vectors of trunc(m * g) for all monomials m with deg m >= min_deg
    that can contribute below the index bound."""
    order = g.order()
    if order is None:
        return
    bound = idx.bound
    fld = g.field
    nvars = idx.nvars
    for d in range(min_deg, bound - order):
        for m in monomials_of_degree(nvars, d):
            vec = {}
            for e, c in g.coeffs.items():
                shifted = tuple(a + b for a, b in zip(e, m))
                if sum(shifted) < bound:
                    i = idx.index(shifted)
                    acc = fld.add(vec.get(i, fld.zero()), c)
                    if fld.is_zero(acc):
                        vec.pop(i, None)
                    else:
                        vec[i] = acc
            if vec:
                yield vec


def ideal_jet_span(generators, idx: MonomialIndex, field: FieldSpec) -> RowSpace:
    """Row space of all truncated monomial multiples of the generators in
    the ambient polynomial ring."""
    span = RowSpace(field)
    for g in generators:
        span.insert_all(monomial_multiples(g, idx))
    return span


def ideal_member_below(target: TruncatedSeries, generators, precision: int) -> bool:
    """Jet-level ideal membership in the ambient power series ring: True
    when target lies in the span of truncated generator multiples below the
    given degree.  False is a certified refutation at that degree."""
    idx = MonomialIndex(len(target.variables), precision)
    span = ideal_jet_span([g.truncate(min(g.precision, precision)) for g in generators],
                          idx, target.field)
    return span.contains(series_vector(target.truncate(min(target.precision, precision)), idx))


class JetRing:
    """k[variables]/(f) truncated below `precision`."""

    def __init__(self, f: TruncatedSeries, precision: int | None = None):
        if precision is None:
            precision = f.precision
        if precision > f.precision and not f.exact:
            raise ValueError("requested jet precision exceeds the known precision of f")
        self.f = f.truncate(precision) if precision != f.precision else f
        self.variables = f.variables
        self.field = f.field
        self.precision = precision
        self.idx = MonomialIndex(len(f.variables), precision)
        self.ideal = RowSpace(self.field)
        self.ideal.insert_all(monomial_multiples(self.f, self.idx))

    def vector(self, g: TruncatedSeries) -> dict:
        return series_vector(g.truncate(min(g.precision, self.precision)), self.idx)

    def reduce(self, g: TruncatedSeries) -> dict:
        return self.ideal.reduce(self.vector(g))

    def reduce_vector(self, vec: dict) -> dict:
        return self.ideal.reduce(vec)

    def series(self, vec: dict) -> TruncatedSeries:
        return vector_series(vec, self.idx, self.variables, self.field, self.precision)

    def is_zero(self, g: TruncatedSeries) -> bool:
        return not self.reduce(g)
