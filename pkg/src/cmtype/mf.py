"""Matrix factorizations (phi, psi) with phi*psi = psi*phi = f*I.

The double-branched-cover lift sends a factorization of f to the size-2n
block factorization of f + z^2; reducing the lift modulo z recovers a
presentation of the reduced module over the original ring.  Presentation
matrices are minimized by pivoting away unit entries with invertible row
and column operations, so the surviving row count is the minimal number
of generators of the cokernel.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    MixedContextError,
    ShapeMismatchError,
    VariableCollisionError,
)
from .series import TruncatedSeries, invert_unit


def _check_matrix(rows):
    rows = tuple(tuple(r) for r in rows)
    if not rows:
        return rows
    sample = rows[0][0]
    for row in rows:
        for e in row:
            if e.variables != sample.variables or e.field != sample.field:
                raise MixedContextError("matrix entries in mixed contexts")
    return rows


def mat_mul(a, b):
    n, m, l = len(a), len(b[0]), len(b)
    if len(a[0]) != l:
        raise ShapeMismatchError("inner dimensions disagree")
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = a[i][0] * b[0][j]
            for k in range(1, l):
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def determinant(rows) -> TruncatedSeries:
    n = len(rows)
    sample = rows[0][0]
    if n == 1:
        return rows[0][0]
    acc = None
    for j in range(n):
        entry = rows[0][j]
        if entry.is_zero() and entry.exact:
            continue
        minor = [tuple(r[:j] + r[j + 1:]) for r in rows[1:]]
        term = entry * determinant(minor)
        if j % 2 == 1:
            term = -term
        acc = term if acc is None else acc + term
    if acc is None:
        return TruncatedSeries.zero(sample.variables, sample.field, sample.precision)
    return acc


@dataclass(frozen=True)
class MatrixFactorization:
    f: TruncatedSeries
    phi: tuple
    psi: tuple

    def __post_init__(self):
        object.__setattr__(self, "phi", _check_matrix(self.phi))
        object.__setattr__(self, "psi", _check_matrix(self.psi))
        n = len(self.phi)
        if any(len(r) != n for r in self.phi) or len(self.psi) != n or \
                any(len(r) != n for r in self.psi):
            raise ShapeMismatchError("factorization matrices must be square, same size")

    @property
    def size(self) -> int:
        return len(self.phi)


def _is_f_times_identity(product, f: TruncatedSeries) -> bool:
    n = len(product)
    for i in range(n):
        for j in range(n):
            expected = f if i == j else TruncatedSeries.zero(
                f.variables, f.field, f.precision)
            if not product[i][j].same_below(expected):
                return False
    return True


def verify_mf(mf: MatrixFactorization) -> bool:
    """True iff phi*psi and psi*phi both equal f*I below precision."""
    return (_is_f_times_identity(mat_mul(mf.phi, mf.psi), mf.f)
            and _is_f_times_identity(mat_mul(mf.psi, mf.phi), mf.f))


def knorrer_lift(mf: MatrixFactorization, z: str) -> MatrixFactorization:
    """Size-2n factorization of f + z^2 from a size-n factorization of f:
    Phi = [[phi, -zI], [zI, psi]], Psi = [[psi, zI], [-zI, phi]]."""
    if z in mf.f.variables:
        raise VariableCollisionError(f"variable {z!r} already occurs")
    variables = mf.f.variables + (z,)
    fld = mf.f.field
    prec = mf.f.precision
    zs = TruncatedSeries.variable(z, variables, fld, prec)
    zero = TruncatedSeries.zero(variables, fld, prec)
    n = mf.size
    phi_e = [[e.extend_variables(variables) for e in row] for row in mf.phi]
    psi_e = [[e.extend_variables(variables) for e in row] for row in mf.psi]

    def block(a, b, c, d):
        rows = []
        for i in range(n):
            rows.append(tuple(a[i]) + tuple(b[i]))
        for i in range(n):
            rows.append(tuple(c[i]) + tuple(d[i]))
        return tuple(rows)

    neg_z_i = [[(-zs if i == j else zero) for j in range(n)] for i in range(n)]
    z_i = [[(zs if i == j else zero) for j in range(n)] for i in range(n)]
    lifted_f = mf.f.extend_variables(variables) + zs * zs
    return MatrixFactorization(
        f=lifted_f,
        phi=block(phi_e, neg_z_i, z_i, psi_e),
        psi=block(psi_e, z_i, neg_z_i, phi_e),
    )


@dataclass(frozen=True)
class PresentationMatrix:
    """Rectangular presentation of a module over k[[variables]]/(ring_equation);
    rows correspond to generators.  removed_pivots records the unit pivots
    eliminated during minimization (so determinant bookkeeping stays exact)."""

    ring_equation: TruncatedSeries
    matrix: tuple
    minimized: bool = False
    removed_pivots: tuple = ()

    @property
    def rows(self) -> int:
        return len(self.matrix)

    @property
    def cols(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    @property
    def nu(self) -> int:
        """Minimal generator count of the cokernel (row count once minimized)."""
        return self.rows


def mf_presentation(mf: MatrixFactorization) -> PresentationMatrix:
    return PresentationMatrix(ring_equation=mf.f, matrix=mf.phi)


def reduce_mod_z(mf: MatrixFactorization, z: str) -> PresentationMatrix:
    """Presentation of N/zN over k[[V]]/(f) for a factorization of f + z^2."""
    if z not in mf.f.variables:
        raise ShapeMismatchError(f"no variable {z!r} in the equation")
    i = mf.f.variables.index(z)
    fld = mf.f.field
    coeffs = {}
    for e, c in mf.f.coeffs.items():
        if e[i] == 0:
            coeffs[e] = c
        elif e[i] == 2 and sum(e) == 2 and fld.is_one(c):
            continue
        else:
            raise ShapeMismatchError("equation is not of the form f + z^2")
    if not coeffs and mf.f.exact:
        raise ShapeMismatchError("equation is exactly z^2; no base germ")
    base = TruncatedSeries(mf.f.variables, fld, mf.f.precision, coeffs,
                           mf.f.exact).drop_variable(z)

    def at_zero(entry: TruncatedSeries) -> TruncatedSeries:
        kept = {e: c for e, c in entry.coeffs.items() if e[i] == 0}
        return TruncatedSeries(entry.variables, fld, entry.precision, kept,
                               entry.exact).drop_variable(z)

    matrix = tuple(tuple(at_zero(e) for e in row) for row in mf.phi)
    return PresentationMatrix(ring_equation=base, matrix=matrix)


def _is_zero_column(column, ring_equation: TruncatedSeries) -> bool:
    """Entry-wise test that a relation column is zero over the quotient ring:
    exact zeros and exact scalar multiples of the ring equation qualify."""
    fld = ring_equation.field
    lead = None
    for e in sorted(ring_equation.coeffs, key=lambda e: (sum(e), e)):
        lead = e
        break
    for entry in column:
        if entry.exact and entry.is_zero():
            continue
        if not entry.exact or lead is None:
            return False
        c = entry.coeffs.get(lead)
        if c is None:
            return False
        ratio = fld.div(c, ring_equation.coeffs[lead])
        if not entry.same_below(ring_equation.scale(ratio)):
            return False
    return True


def minimize_presentation(p: PresentationMatrix) -> PresentationMatrix:
    """Pivot away unit entries (leftmost-uppermost first) with invertible
    row and column operations; the result has no unit entries, and its row
    count is the minimal generator count of the cokernel."""
    matrix = [list(row) for row in p.matrix]
    pivots = list(p.removed_pivots)
    while True:
        pivot = None
        for i, row in enumerate(matrix):
            for j, entry in enumerate(row):
                if entry.is_unit():
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        pi, pj = pivot
        pval = matrix[pi][pj]
        pinv = invert_unit(pval)
        # clear the pivot column with row operations
        for i in range(len(matrix)):
            if i == pi:
                continue
            factor = matrix[i][pj] * pinv
            if factor.is_zero():
                continue
            matrix[i] = [matrix[i][j] - factor * matrix[pi][j]
                         for j in range(len(matrix[i]))]
        # clear the pivot row with column operations
        for j in range(len(matrix[pi])):
            if j == pj:
                continue
            factor = matrix[pi][j] * pinv
            if factor.is_zero():
                continue
            for i in range(len(matrix)):
                matrix[i][j] = matrix[i][j] - factor * matrix[i][pj]
        pivots.append(pval)
        matrix = [row[:pj] + row[pj + 1:]
                  for i, row in enumerate(matrix) if i != pi]
    return PresentationMatrix(
        ring_equation=p.ring_equation,
        matrix=tuple(tuple(row) for row in matrix),
        minimized=True,
        removed_pivots=tuple(pivots),
    )


def presents_free_module(p: PresentationMatrix) -> bool:
    """True when every relation column vanishes over the quotient ring, so
    the presentation is empty and the cokernel is free on its rows."""
    if not p.matrix or not p.matrix[0]:
        return True
    return all(
        _is_zero_column([row[j] for row in p.matrix], p.ring_equation)
        for j in range(len(p.matrix[0])))
