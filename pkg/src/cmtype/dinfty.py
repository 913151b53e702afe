"""Catalog of the indecomposable maximal Cohen-Macaulay modules over
k[[x,y]]/(xy^2), given by explicit matrix factorizations.

The one-by-one presentations are (y), (x), (y^2), (xy), (xy^2); the
two-by-two ones come in four one-parameter families

    [[y, x^k], [0, -y]],      [[xy, x^(k+1)], [0, -xy]],
    [[xy, x^k], [0, -y]],     [[y, x^(k+1)], [0, -xy]],    k = 1, 2, 3, ...

Complements are the exact solutions psi = f*adj(phi)/det(phi), which pairs
the first two families with each other and likewise the last two (up to
the parameter shift).  The entry (xy^2) is the ring relation itself and is
flagged degenerate: its cokernel is the free module, so it is excluded
from generator-count statistics.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import FieldSpec, QQ
from .mf import MatrixFactorization, minimize_presentation, mf_presentation
from .parser import matrix_to_text
from .series import TruncatedSeries


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    mf: MatrixFactorization
    k_param: int | None
    degenerate: bool = False

    @property
    def minimized_size(self) -> int:
        return minimize_presentation(mf_presentation(self.mf)).rows


def _divide_by_monomial(a: TruncatedSeries, exps, coeff) -> TruncatedSeries:
    fld = a.field
    inv = fld.inv(coeff)
    coeffs = {}
    for e, c in a.coeffs.items():
        shifted = tuple(x - y for x, y in zip(e, exps))
        if any(x < 0 for x in shifted):
            raise ValueError("entry not divisible by the determinant monomial")
        coeffs[shifted] = fld.mul(c, inv)
    return TruncatedSeries(a.variables, fld, a.precision, coeffs, a.exact)


def _complement(phi, f: TruncatedSeries):
    """psi = f * adj(phi) / det(phi) for 1x1 and 2x2 phi with monomial
    determinant (all catalog members)."""
    if len(phi) == 1:
        det = phi[0][0]
        adj = ((TruncatedSeries.one(f.variables, f.field, f.precision),),)
    else:
        a, b, c, d = phi[0][0], phi[0][1], phi[1][0], phi[1][1]
        det = a * d - b * c
        adj = ((d, -b), (-c, a))
    if len(det.coeffs) != 1:
        raise ValueError("catalog determinants are monomials")
    (exps, coeff), = det.coeffs.items()
    return tuple(
        tuple(_divide_by_monomial(f * entry, exps, coeff) for entry in row)
        for row in adj)


def enumerate_dinfty(k_max: int, field: FieldSpec = QQ,
                     precision: int | None = None) -> list[CatalogEntry]:
    """The 5 one-by-one entries plus 4*k_max two-by-two entries, each with
    its exact complement; every product identity holds as a polynomial
    identity at the chosen precision."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    if precision is None:
        precision = 2 * k_max + 8
    variables = ("x", "y")
    x = TruncatedSeries.variable("x", variables, field, precision)
    y = TruncatedSeries.variable("y", variables, field, precision)
    zero = TruncatedSeries.zero(variables, field, precision)
    f = x * y * y

    entries: list[CatalogEntry] = []

    def add(label, phi, k_param=None, degenerate=False):
        psi = _complement(phi, f)
        entries.append(CatalogEntry(
            label=label,
            mf=MatrixFactorization(f=f, phi=phi, psi=psi),
            k_param=k_param,
            degenerate=degenerate,
        ))

    add("Y", ((y,),))
    add("X", ((x,),))
    add("Y2", ((y * y,),))
    add("XY", ((x * y,),))
    add("XY2", ((f,),), degenerate=True)
    for k in range(1, k_max + 1):
        xk = x ** k
        xk1 = x ** (k + 1)
        add(f"FamA({k})", ((y, xk), (zero, -y)), k_param=k)
        add(f"FamB({k})", ((x * y, xk1), (zero, -(x * y))), k_param=k)
        add(f"FamC({k})", ((x * y, xk), (zero, -y)), k_param=k)
        add(f"FamD({k})", ((y, xk1), (zero, -(x * y))), k_param=k)
    return entries


def catalog_export_text(entries) -> str:
    """One entry per line: label, phi, psi in the matrix text format."""
    lines = []
    for e in entries:
        lines.append("\t".join([e.label,
                                matrix_to_text(e.mf.phi),
                                matrix_to_text(e.mf.psi)]))
    return "\n".join(lines)
