"""Sparse exact linear algebra over a FieldSpec.

Vectors are dicts mapping integer column ids to nonzero field elements.
RowSpace keeps a reduced row echelon basis (each pivot column occurs in
exactly one row, rows normalized to pivot coefficient 1), so reducing a
vector yields canonical quotient coordinates supported on the free
columns.  Column ids are expected to be enumerated in a meaningful order
(the jet modules use degree-then-lex), making pivots deterministic.
"""

from __future__ import annotations

from .fields import FieldSpec


class RowSpace:
    def __init__(self, field: FieldSpec):
        self.field = field
        self.rows: list[dict] = []
        self.pivots: dict[int, int] = {}  # column -> row index

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _subtract(self, v: dict, coef, row: dict):
        fld = self.field
        for col, val in row.items():
            acc = fld.sub(v.get(col, fld.zero()), fld.mul(coef, val))
            if fld.is_zero(acc):
                v.pop(col, None)
            else:
                v[col] = acc

    def reduce(self, vec: dict) -> dict:
        """Residual of vec modulo the row space; supported on free columns."""
        fld = self.field
        v = {c: x for c, x in vec.items() if not fld.is_zero(x)}
        while True:
            hit = [c for c in v if c in self.pivots]
            if not hit:
                return v
            c = min(hit)
            self._subtract(v, v[c], self.rows[self.pivots[c]])

    def insert(self, vec: dict) -> bool:
        """Add a vector; returns True when it enlarged the space."""
        fld = self.field
        v = self.reduce(vec)
        if not v:
            return False
        pivot = min(v)
        inv = fld.inv(v[pivot])
        v = {c: fld.mul(x, inv) for c, x in v.items()}
        # back-reduce the existing rows so the basis stays in RREF
        for row in self.rows:
            if pivot in row:
                self._subtract(row, row[pivot], v)
        self.pivots[pivot] = len(self.rows)
        self.rows.append(v)
        return True

    def insert_all(self, vecs) -> int:
        added = 0
        for v in vecs:
            if self.insert(v):
                added += 1
        return added

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def free_columns(self, universe) -> list[int]:
        return [c for c in universe if c not in self.pivots]

    def copy(self) -> "RowSpace":
        dup = RowSpace(self.field)
        dup.rows = [dict(r) for r in self.rows]
        dup.pivots = dict(self.pivots)
        return dup


def kernel_basis(constraints, universe, field: FieldSpec) -> list[dict]:
    """Basis of the solution space of the homogeneous system whose rows are
    `constraints` (dicts over the unknown ids in `universe`)."""
    rs = RowSpace(field)
    rs.insert_all(constraints)
    basis = []
    for f in rs.free_columns(universe):
        vec = {f: field.one()}
        for p, ridx in rs.pivots.items():
            a = rs.rows[ridx].get(f)
            if a is not None:
                vec[p] = field.neg(a)
        basis.append(vec)
    return basis


def kernel_rowspace(constraints, universe, field: FieldSpec) -> RowSpace:
    """Kernel as a ready-made RowSpace.  Each kernel basis vector has a
    distinct unit coordinate (its free column) that no other basis vector
    touches, so the basis is already in reduced echelon form and can be
    adopted without re-elimination."""
    rs = RowSpace(field)
    rs.insert_all(constraints)
    out = RowSpace(field)
    for f in rs.free_columns(universe):
        vec = {f: field.one()}
        for p, ridx in rs.pivots.items():
            a = rs.rows[ridx].get(f)
            if a is not None:
                vec[p] = field.neg(a)
        out.pivots[f] = len(out.rows)
        out.rows.append(vec)
    return out


def vec_add(v: dict, w: dict, field: FieldSpec) -> dict:
    out = dict(v)
    for c, x in w.items():
        acc = field.add(out.get(c, field.zero()), x)
        if field.is_zero(acc):
            out.pop(c, None)
        else:
            out[c] = acc
    return out


def vec_scale(v: dict, a, field: FieldSpec) -> dict:
    if field.is_zero(a):
        return {}
    return {c: field.mul(x, a) for c, x in v.items()}
