"""Modules over Artinian pairs, big indecomposables, and the pullback
lift to modules over the curve ring.

A module over A -> B is a pair (V, W) with W = B^r free and V a k-spanned
A-submodule with BV = W.  The construction of arbitrarily large
indecomposables takes W = D^n over the reduced pair k -> D with D the
three-dimensional square-zero local algebra, and spans V by the unit
rows e_i together with a*e_i + b*(Je)_i for a nilpotent Jordan block J.
Indecomposability is certified per instance from the endomorphism
algebra E = {beta in End_B(W) : beta(V) <= V}: the radical comes from the
trace form of the left regular representation and the semisimple quotient
is searched for idempotents (minimal-polynomial splitting over Q, an
exhaustive sweep over small prime fields).

Lifting pulls a pair module back through the conductor square: the
preimage of V inside S^r is generated by lifts of a V-basis together
with the conductor columns, and its generator count and a presentation
are read off jets.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import (
    DimensionTooLargeError,
    HypothesesNotMetError,
    MismatchedSquareError,
    UndecidedError,
)
from . import polyutil
from .jets import monomials_of_degree
from .linalg import RowSpace, kernel_rowspace
from .pairs import ArtinianPair, ConductorSquare
from .series import TruncatedSeries


# ---------------------------------------------------------------------------
# pair modules


def _apply_b(pair: ArtinianPair, b: dict, w: dict, rank: int) -> dict:
    """Componentwise action of a B-element on a W = B^rank vector."""
    fld = pair.field
    dim = pair.dim
    out: dict = {}
    by_comp: dict = {}
    for flat, c in w.items():
        comp, idx = divmod(flat, dim)
        by_comp.setdefault(comp, {})[idx] = c
    for comp, vec in by_comp.items():
        prod = pair.mul(b, vec)
        for idx, c in prod.items():
            out[comp * dim + idx] = c
    return out


@dataclass
class PairModule:
    pair: ArtinianPair
    rank: int
    v_basis: tuple

    @property
    def dim_w(self) -> int:
        return self.rank * self.pair.dim

    def v_space(self) -> RowSpace:
        rs = RowSpace(self.pair.field)
        rs.insert_all(dict(v) for v in self.v_basis)
        return rs

    def validate(self):
        fld = self.pair.field
        vs = self.v_space()
        for a in self.pair.a_basis:
            for v in self.v_basis:
                if not vs.contains(_apply_b(self.pair, a, dict(v), self.rank)):
                    raise ValueError("V is not an A-submodule")
        full = RowSpace(fld)
        for l in range(self.pair.dim):
            b = {l: fld.one()}
            for v in self.v_basis:
                full.insert(_apply_b(self.pair, b, dict(v), self.rank))
        if full.rank != self.dim_w:
            raise ValueError("BV does not fill W")


def direct_sum(m1: PairModule, m2: PairModule) -> PairModule:
    if m1.pair is not m2.pair and m1.pair.table != m2.pair.table:
        raise ValueError("summands over different pairs")
    dim = m1.pair.dim
    shift = m1.rank * dim
    v2 = [{flat + shift: c for flat, c in v.items()} for v in m2.v_basis]
    return PairModule(pair=m1.pair, rank=m1.rank + m2.rank,
                      v_basis=tuple([dict(v) for v in m1.v_basis] + v2))


def trivial_pair_module(pair: ArtinianPair) -> PairModule:
    """(image of A, B): the rank-1 module whose lift is the ring itself."""
    return PairModule(pair=pair, rank=1,
                      v_basis=tuple(dict(a) for a in pair.a_basis))


# ---------------------------------------------------------------------------
# structure helpers for small local algebras


def _mult_matrix(pair: ArtinianPair, v: dict):
    """Columns of the multiplication-by-v operator on B."""
    return [pair.mul(v, {j: pair.field.one()}) for j in range(pair.dim)]


def _nilpotency_scalar(pair: ArtinianPair, v: dict):
    """lambda with v - lambda*1 nilpotent in a local algebra, or None."""
    fld = pair.field
    dim = pair.dim
    candidates = []
    if fld.characteristic == 0 or dim % fld.characteristic != 0:
        cols = _mult_matrix(pair, v)
        trace = fld.zero()
        for j in range(dim):
            trace = fld.add(trace, cols[j].get(j, fld.zero()))
        candidates.append(fld.div(trace, fld.from_int(dim)))
    else:
        candidates.extend(fld.from_int(i) for i in range(fld.characteristic))
    for lam in candidates:
        shifted = dict(v)
        delta = pair_scale(pair.one, fld.neg(lam), fld)
        for k, c in delta.items():
            acc2 = fld.add(shifted.get(k, fld.zero()), c)
            if fld.is_zero(acc2):
                shifted.pop(k, None)
            else:
                shifted[k] = acc2
        power = dict(shifted)
        nil = False
        for _ in range(dim):
            if not power:
                nil = True
                break
            power = pair.mul(power, shifted)
        if nil or not power:
            return lam, shifted
    return None


def pair_scale(v: dict, a, fld) -> dict:
    if fld.is_zero(a):
        return {}
    return {k: fld.mul(c, a) for k, c in v.items()}


def _radical_complement_basis(pair: ArtinianPair):
    """For a pair with A = k: nilpotent representatives spanning B/k*1,
    obtained by shifting a complement basis of 1 by its scalar part."""
    fld = pair.field
    span = RowSpace(fld)
    span.insert(dict(pair.one))
    reps = []
    for j in range(pair.dim):
        probe = {j: fld.one()}
        if not span.insert(dict(probe)):
            continue
        found = _nilpotency_scalar(pair, probe)
        if found is None:
            raise HypothesesNotMetError("B is not local with residue field k")
        _, shifted = found
        reps.append(shifted)
    return reps


# ---------------------------------------------------------------------------
# construction of big indecomposables


def _jordan_v_basis(pair: ArtinianPair, n: int, xbar: dict, ybar: dict):
    fld = pair.field
    dim = pair.dim
    vbasis = []
    for i in range(n):
        vbasis.append({i * dim + k: c for k, c in pair.one.items()})
    if n == 1:
        return vbasis
    for i in range(n):
        vec = {i * dim + k: c for k, c in xbar.items()}
        if i + 1 < n:
            for k, c in ybar.items():
                flat = (i + 1) * dim + k
                acc = fld.add(vec.get(flat, fld.zero()), c)
                if fld.is_zero(acc):
                    vec.pop(flat, None)
                else:
                    vec[flat] = acc
        vbasis.append(vec)
    return vbasis


def _build_over_residue_pair(pair: ArtinianPair, n: int) -> PairModule:
    """Jordan construction over a pair with A = k."""
    reps = _radical_complement_basis(pair)
    if pair.dim == 3:
        # the square-zero fat point: both radical products must vanish
        for r1 in reps:
            for r2 in reps:
                if pair.mul(r1, r2):
                    raise HypothesesNotMetError(
                        "three-dimensional B without square-zero radical")
    elif pair.dim < 3:
        raise HypothesesNotMetError(
            "B needs dimension >= 4, or the square-zero dimension-3 form")
    xbar, ybar = reps[0], reps[1]
    module = PairModule(pair=pair, rank=n,
                        v_basis=tuple(_jordan_v_basis(pair, n, xbar, ybar)))
    module.validate()
    return module


def _quotient_pair_and_transport(pair: ArtinianPair):
    """For the noncyclicity route: C = im(A) + m_A B, D = C/m_A C.

    Returns (reduced pair k -> D, list of D-basis representatives inside B,
    m_A C span), with the first representative the identity."""
    fld = pair.field
    mab = pair.radical_b_span()
    c_span = RowSpace(fld)
    c_span.insert(dict(pair.one))
    for a in pair.a_basis:
        c_span.insert(dict(a))
    c_basis = [dict(pair.one)]
    for row in mab.rows:
        if c_span.insert(dict(row)):
            c_basis.append(dict(row))
        else:
            c_basis.append(None)
    c_basis = [v for v in c_basis if v is not None]
    # m_A C inside B
    mac = RowSpace(fld)
    c_rows = [dict(r) for r in c_span.rows]
    for a in pair.a_radical:
        for c in c_rows:
            mac.insert(pair.mul(a, c))
    d_reps = []
    resid_span = RowSpace(fld)
    for c in [dict(pair.one)] + c_rows:
        resid = mac.reduce(dict(c))
        if resid and resid_span.insert(dict(resid)):
            d_reps.append((dict(c), resid))
    if len(d_reps) != 3:
        raise HypothesesNotMetError(
            f"reduced algebra C/m_A C has dimension {len(d_reps)}, expected 3")
    # identity first (the first rep is built from pair.one)
    reps = [r for r, _ in d_reps]
    resids = [res for _, res in d_reps]

    def d_coords(vec_in_b: dict) -> dict:
        resid = mac.reduce(dict(vec_in_b))
        return _express(resid, resids, fld)

    table = []
    for i in range(3):
        row = []
        for j in range(3):
            row.append(d_coords(pair.mul(reps[i], reps[j])))
        table.append(tuple(row))
    one_d = d_coords(dict(pair.one))
    reduced = ArtinianPair(field=fld, table=tuple(table), one=one_d,
                           a_basis=(one_d,), a_radical=(),
                           labels=("1", "c1", "c2"))
    return reduced, reps, mac


def _express(vec: dict, basis: list, fld) -> dict:
    """Coordinates of vec in terms of independent sparse basis vectors."""
    work = [dict(b) for b in basis]
    target = dict(vec)
    # sequential elimination on a private copy
    elim = []
    for bi, b in enumerate(work):
        row = dict(b)
        combo = {bi: fld.one()}
        for col, (prow, pcombo) in elim:
            if col in row:
                c = row[col]
                for k, v in prow.items():
                    acc = fld.sub(row.get(k, fld.zero()), fld.mul(c, v))
                    if fld.is_zero(acc):
                        row.pop(k, None)
                    else:
                        row[k] = acc
                for k, v in pcombo.items():
                    acc = fld.sub(combo.get(k, fld.zero()), fld.mul(c, v))
                    if fld.is_zero(acc):
                        combo.pop(k, None)
                    else:
                        combo[k] = acc
        if not row:
            raise ValueError("basis vectors are dependent")
        piv = min(row)
        inv = fld.inv(row[piv])
        row = {k: fld.mul(v, inv) for k, v in row.items()}
        combo = {k: fld.mul(v, inv) for k, v in combo.items()}
        elim.append((piv, (row, combo)))
    result: dict = {}
    for col, (prow, pcombo) in elim:
        if col in target:
            c = target[col]
            for k, v in prow.items():
                acc = fld.sub(target.get(k, fld.zero()), fld.mul(c, v))
                if fld.is_zero(acc):
                    target.pop(k, None)
                else:
                    target[k] = acc
            for k, v in pcombo.items():
                acc = fld.add(result.get(k, fld.zero()), fld.mul(c, v))
                if fld.is_zero(acc):
                    result.pop(k, None)
                else:
                    result[k] = acc
    if target:
        raise ValueError("vector not in the span of the basis")
    return result


def build_indecomposable_pair_module(pair: ArtinianPair, n: int) -> PairModule:
    """A pair module of constant rank n expected to be indecomposable.

    Over a pair with A = k the Jordan-block construction applies directly
    (rank 1 uses the cyclic module).  Over a local pair the hypotheses
    nu_A(B) >= 4, or nu_A(B) = 3 with a non-cyclic m_A B / m_A, trigger the
    reduction to k -> B/m_A B or to k -> C/m_A C and the result is carried
    back to W = B^n through the preimage of V.
    """
    if n < 1:
        raise ValueError("rank must be >= 1")
    if pair.degenerate:
        raise HypothesesNotMetError("degenerate pair")
    fld = pair.field
    if pair.dim_a == 1:
        return _build_over_residue_pair(pair, n)
    nu = pair.nu_a_of_b()
    noncyc = pair.noncyclicity()
    if nu >= 4:
        # k -> B/m_A B
        mab = pair.radical_b_span()
        free = mab.free_columns(range(pair.dim))
        col_of = {c: i for i, c in enumerate(free)}

        def q_coords(vec: dict) -> dict:
            return {col_of[c]: v for c, v in mab.reduce(dict(vec)).items()}

        table = tuple(
            tuple(q_coords(pair.mul({free[i]: fld.one()}, {free[j]: fld.one()}))
                  for j in range(len(free)))
            for i in range(len(free)))
        one_q = q_coords(pair.one)
        reduced = ArtinianPair(field=fld, table=table, one=one_q,
                               a_basis=(one_q,), a_radical=(),
                               labels=tuple(str(c) for c in free))
        small = _build_over_residue_pair(reduced, n)
        # transport: lift V through B^n -> (B/m_A B)^n
        v_basis = []
        for v in small.v_basis:
            lift: dict = {}
            for flat, c in v.items():
                comp, idx = divmod(flat, len(free))
                lift[comp * pair.dim + free[idx]] = c
            v_basis.append(lift)
        for comp in range(n):
            for row in mab.rows:
                v_basis.append({comp * pair.dim + k: c for k, c in row.items()})
        module = PairModule(pair=pair, rank=n, v_basis=tuple(v_basis))
        module.validate()
        return module
    if nu == 3 and noncyc >= 2:
        reduced, reps, mac = _quotient_pair_and_transport(pair)
        small = _build_over_residue_pair(reduced, n)
        v_basis = []
        for v in small.v_basis:
            lift: dict = {}
            for flat, c in v.items():
                comp, idx = divmod(flat, 3)
                for k, cc in reps[idx].items():
                    key = comp * pair.dim + k
                    acc = fld.add(lift.get(key, fld.zero()), fld.mul(c, cc))
                    if fld.is_zero(acc):
                        lift.pop(key, None)
                    else:
                        lift[key] = acc
            v_basis.append(lift)
        for comp in range(n):
            for row in mac.rows:
                v_basis.append({comp * pair.dim + k: c for k, c in row.items()})
        module = PairModule(pair=pair, rank=n, v_basis=tuple(v_basis))
        module.validate()
        return module
    raise HypothesesNotMetError(
        f"nu_A(B) = {nu} with noncyclicity {noncyc}: the big-indecomposables "
        "hypotheses fail")


# ---------------------------------------------------------------------------
# indecomposability certification


class _EndoAlgebra:
    """E = {beta in End_B(W) : beta(V) <= V} with exact structure data.

    Elements are vectors over the flat endomorphism coordinates
    ((i*rank + j)*dimB + b for the matrix entry (i,j) in the B-basis
    direction b); the kernel row space supplies canonical coordinates on
    the computed basis.
    """

    def __init__(self, m: PairModule):
        pair, rank = m.pair, m.rank
        fld = pair.field
        dim = pair.dim
        self.pair, self.rank, self.field = pair, rank, fld
        n_unknowns = rank * rank * dim
        v_span = m.v_space()
        forms: dict = {}
        for v_i, v in enumerate(m.v_basis):
            by_comp: dict = {}
            for flat, c in v.items():
                comp, idx = divmod(flat, dim)
                by_comp.setdefault(comp, {})[idx] = c
            for u in range(n_unknowns):
                ij, b = divmod(u, dim)
                i, j = divmod(ij, rank)
                if j not in by_comp:
                    continue
                prod = pair.mul({b: fld.one()}, by_comp[j])
                if not prod:
                    continue
                image = {i * dim + k: c for k, c in prod.items()}
                resid = v_span.reduce(image)
                for coord, c in resid.items():
                    forms.setdefault((v_i, coord), {})[u] = c
        self.space = kernel_rowspace(list(forms.values()), range(n_unknowns), fld)
        self.basis = [dict(r) for r in self.space.rows]
        # pivot of row k is the column registered in space.pivots
        inv = {ridx: col for col, ridx in self.space.pivots.items()}
        self.pivot_cols = [inv[k] for k in range(len(self.basis))]
        self.dim = len(self.basis)
        self._prod_cache: dict = {}

    def coords(self, endo_vec: dict) -> dict:
        """Coordinates on the computed basis (valid for members of E)."""
        out = {}
        for k, col in enumerate(self.pivot_cols):
            c = endo_vec.get(col)
            if c is not None and not self.field.is_zero(c):
                out[k] = c
        return out

    def contains(self, endo_vec: dict) -> bool:
        return not self.space.reduce(dict(endo_vec))

    def identity_vec(self) -> dict:
        fld = self.field
        dim = self.pair.dim
        vec = {}
        for i in range(self.rank):
            for b, c in self.pair.one.items():
                vec[(i * self.rank + i) * dim + b] = c
        return vec

    def _to_matrix(self, endo_vec: dict):
        dim = self.pair.dim
        mat: dict = {}
        for u, c in endo_vec.items():
            ij, b = divmod(u, dim)
            mat.setdefault(ij, {})[b] = c
        return mat

    def compose_coords(self, k: int, l: int) -> dict:
        """Coordinates of basis[k] o basis[l]."""
        key = (k, l)
        if key in self._prod_cache:
            return self._prod_cache[key]
        fld = self.field
        dim = self.pair.dim
        a = self._to_matrix(self.basis[k])
        b = self._to_matrix(self.basis[l])
        out_vec: dict = {}
        r = self.rank
        for ij_a, entry_a in a.items():
            i, m_mid = divmod(ij_a, r)
            for ij_b, entry_b in b.items():
                m2, j = divmod(ij_b, r)
                if m2 != m_mid:
                    continue
                prod = self.pair.mul(entry_a, entry_b)
                for bb, c in prod.items():
                    u = (i * r + j) * dim + bb
                    acc = fld.add(out_vec.get(u, fld.zero()), c)
                    if fld.is_zero(acc):
                        out_vec.pop(u, None)
                    else:
                        out_vec[u] = acc
        res = self.coords(out_vec)
        self._prod_cache[key] = res
        return res


class _QuotientAlgebra:
    """E / N for a nilpotent ideal N, with multiplication tables."""

    def __init__(self, endo: _EndoAlgebra, rad_rows: RowSpace):
        fld = endo.field
        self.field = fld
        self.rad = rad_rows
        self.free = rad_rows.free_columns(range(endo.dim))
        self.dim = len(self.free)
        self.endo = endo
        pos = {c: i for i, c in enumerate(self.free)}
        self.table = []
        for a in self.free:
            row = []
            for b in self.free:
                prod = endo.compose_coords(a, b)
                red = rad_rows.reduce(prod)
                row.append({pos[c]: v for c, v in red.items()})
            self.table.append(row)
        one_coords = endo.coords(endo.identity_vec())
        red = rad_rows.reduce(one_coords)
        self.one = {pos[c]: v for c, v in red.items()}

    def mul(self, u: dict, v: dict) -> dict:
        fld = self.field
        out: dict = {}
        for i, a in u.items():
            row = self.table[i]
            for j, b in v.items():
                coeff = fld.mul(a, b)
                for k, c in row[j].items():
                    acc = fld.add(out.get(k, fld.zero()), fld.mul(coeff, c))
                    if fld.is_zero(acc):
                        out.pop(k, None)
                    else:
                        out[k] = acc
        return out

    def is_idempotent(self, v: dict) -> bool:
        prod = self.mul(v, v)
        return prod == v

    def minimal_polynomial(self, z: dict):
        fld = self.field
        powers = [dict(self.one)]
        while True:
            nxt = self.mul(powers[-1], z)
            try:
                combo = _express(nxt, powers, fld)
            except ValueError:
                powers.append(nxt)
                continue
            k = len(powers)
            coeffs = [fld.neg(combo.get(i, fld.zero())) for i in range(k)]
            coeffs.append(fld.one())
            return coeffs, powers

    def evaluate(self, coeffs, powers, z: dict) -> dict:
        fld = self.field
        while len(powers) < len(coeffs):
            powers.append(self.mul(powers[-1], z))
        out: dict = {}
        for i, c in enumerate(coeffs):
            if fld.is_zero(c):
                continue
            for k, v in powers[i].items():
                acc = fld.add(out.get(k, fld.zero()), fld.mul(c, v))
                if fld.is_zero(acc):
                    out.pop(k, None)
                else:
                    out[k] = acc
        return out


def _factor_univariate(coeffs, fld):
    """Irreducible factorization over Q or F_p via sympy; returns a list of
    (ascending coefficient list, multiplicity)."""
    import sympy

    t = sympy.Symbol("t")
    if fld.characteristic == 0:
        expr = sum(sympy.Rational(c.numerator, c.denominator) * t ** i
                   for i, c in enumerate(coeffs))
        _, factors = sympy.Poly(expr, t, domain="QQ").factor_list()
    else:
        p = fld.characteristic
        expr = sum(int(c) * t ** i for i, c in enumerate(coeffs))
        _, factors = sympy.Poly(expr, t, modulus=p).factor_list()
    out = []
    for poly, mult in factors:
        cs = poly.all_coeffs()[::-1]
        if fld.characteristic == 0:
            conv = [fld.from_fraction(c.p, c.q) for c in map(sympy.Rational, cs)]
        else:
            conv = [fld.from_int(int(c)) for c in cs]
        out.append((polyutil.trim(conv), mult))
    return out


def _split_by_minpoly(quot: _QuotientAlgebra, z: dict):
    """If the minimal polynomial of z has two coprime parts, produce a
    nontrivial idempotent; returns one or None."""
    fld = quot.field
    coeffs, powers = quot.minimal_polynomial(z)
    factors = _factor_univariate(coeffs, fld)
    if len(factors) < 2:
        return None
    g1 = factors[0][0]
    for _ in range(factors[0][1] - 1):
        g1 = polyutil.mul(g1, factors[0][0], fld)
    g2 = [fld.one()]
    for poly, mult in factors[1:]:
        for _ in range(mult):
            g2 = polyutil.mul(g2, poly, fld)
    g, s, t = polyutil.ext_gcd(g1, g2, fld)
    if polyutil.deg(g) != 0:
        return None
    e = quot.evaluate(polyutil.mul(t, g2, fld), powers, z)
    if not e or e == quot.one:
        return None
    if not quot.is_idempotent(e):
        return None
    return e


def _rank_of_left_multiplication(quot: _QuotientAlgebra, b: dict) -> int:
    fld = quot.field
    rs = RowSpace(fld)
    for j in range(quot.dim):
        col = quot.mul(b, {j: fld.one()})
        if col:
            rs.insert(col)
    return rs.rank


def is_indecomposable_pair_module(m: PairModule, cap: int = 512,
                                  seed: int = 20259) -> bool:
    """Decide whether (V, W) is indecomposable.

    The endomorphism algebra of the pair module is computed exactly; its
    radical candidate is the kernel of the trace form of left
    multiplication, verified nilpotent so idempotents lift.  The quotient
    is declared local when it is one-dimensional, when it is a commutative
    field (certified by an irreducible minimal polynomial of a primitive
    element), or, over a prime field, when an exhaustive idempotent sweep
    finds nothing; any splitting witness decides decomposability.
    """
    endo = _EndoAlgebra(m)
    fld = endo.field
    if endo.dim == 0:
        raise ValueError("endomorphism algebra is zero")
    if endo.dim > cap:
        raise DimensionTooLargeError(
            f"endomorphism algebra has dimension {endo.dim} > cap {cap}")
    # trace form of left multiplication
    traces = []
    for k in range(endo.dim):
        tr = fld.zero()
        for l in range(endo.dim):
            tr = fld.add(tr, endo.compose_coords(k, l).get(l, fld.zero()))
        traces.append(tr)
    t_rows = []
    for i in range(endo.dim):
        row = {}
        for j in range(endo.dim):
            val = fld.zero()
            for k, c in endo.compose_coords(i, j).items():
                val = fld.add(val, fld.mul(c, traces[k]))
            if not fld.is_zero(val):
                row[j] = val
        t_rows.append(row)
    rad_rows = kernel_rowspace(t_rows, range(endo.dim), fld)
    # the radical candidate must be a nilpotent ideal for idempotent lifting
    nil_ok = True
    layer = [dict(r) for r in rad_rows.rows]
    for _ in range(endo.dim + 1):
        if not layer:
            break
        nxt = []
        probe = RowSpace(fld)
        for a in layer:
            for r in rad_rows.rows:
                prod: dict = {}
                for i, ca in a.items():
                    for j, cb in r.items():
                        for k, c in endo.compose_coords(i, j).items():
                            acc = fld.add(prod.get(k, fld.zero()),
                                          fld.mul(fld.mul(ca, cb), c))
                            if fld.is_zero(acc):
                                prod.pop(k, None)
                            else:
                                prod[k] = acc
                if prod and probe.insert(dict(prod)):
                    nxt.append(prod)
        layer = nxt
    else:
        nil_ok = False
    if not nil_ok:
        raise UndecidedError("radical candidate is not nilpotent; the trace "
                             "form is degenerate in this characteristic")
    quot = _QuotientAlgebra(endo, rad_rows)
    if quot.dim == 1:
        return True
    rng = random.Random(seed)
    # candidate elements: basis, pairwise sums and products, random combos
    candidates = [{i: fld.one()} for i in range(quot.dim)]
    for i in range(quot.dim):
        for j in range(i + 1, quot.dim):
            candidates.append(quot.mul({i: fld.one()}, {j: fld.one()}))
            merged = {i: fld.one()}
            merged[j] = fld.one()
            candidates.append(merged)
    for _ in range(60):
        vec = {}
        for i in range(quot.dim):
            if fld.characteristic == 0:
                c = fld.from_int(rng.randint(-3, 3))
            else:
                c = fld.from_int(rng.randrange(fld.characteristic))
            if not fld.is_zero(c):
                vec[i] = c
        if vec:
            candidates.append(vec)
    commutative = all(
        quot.mul({i: fld.one()}, {j: fld.one()}) ==
        quot.mul({j: fld.one()}, {i: fld.one()})
        for i in range(quot.dim) for j in range(i + 1, quot.dim))
    primitive_irreducible = False
    for z in candidates:
        if not z:
            continue
        e = _split_by_minpoly(quot, z)
        if e is not None:
            return False
        if commutative and not primitive_irreducible:
            coeffs, _ = quot.minimal_polynomial(z)
            if polyutil.deg(coeffs) == quot.dim:
                # primitive element with irreducible minimal polynomial:
                # the commutative quotient is a field
                primitive_irreducible = True
    if commutative and primitive_irreducible:
        return True
    if not commutative:
        for z in candidates:
            if z and 0 < _rank_of_left_multiplication(quot, z) < quot.dim:
                return False
    if fld.characteristic:
        p = fld.characteristic
        if p ** quot.dim <= 2_000_000:
            from itertools import product as iproduct

            for tup in iproduct(range(p), repeat=quot.dim):
                e = {i: fld.from_int(c) for i, c in enumerate(tup) if c}
                if not e or e == quot.one:
                    continue
                if quot.is_idempotent(e):
                    return False
            return True
    if commutative:
        # no splitting element found across basis, products, and randoms
        return True
    raise UndecidedError(
        "noncommutative semisimple quotient without a splitting witness")


# ---------------------------------------------------------------------------
# lifting through the conductor square


@dataclass
class LiftedModulePresentation:
    rank: int
    generators: list
    nu: int
    presentation: object
    precision: int

    def __post_init__(self):
        if self.nu < self.rank:
            raise ValueError("generator count below the rank")


def _transport_v_basis(m: PairModule, square: ConductorSquare):
    """Carry the V-basis of a module over the reduced pair k -> D into
    B^rank over the square's pair, as the preimage through C^rank."""
    pair = square.pair
    fld = pair.field
    try:
        reduced, reps, mac = _quotient_pair_and_transport(pair)
    except HypothesesNotMetError as exc:
        raise MismatchedSquareError(str(exc)) from exc
    # source D: identify (1, s1, s2) with products s_i s_j = 0
    src = m.pair
    s_reps = _radical_complement_basis(src)
    if len(s_reps) != 2 or any(src.mul(a, b) for a in s_reps for b in s_reps):
        raise MismatchedSquareError("module pair is not the square-zero fat point")
    src_basis = [dict(src.one)] + s_reps
    # target D partner: reps[0] is the identity; verify square-zero shape
    for i in (1, 2):
        for j in (1, 2):
            if reduced.table[i][j]:
                raise MismatchedSquareError(
                    "the square's reduced algebra is not square-zero")
    v_basis = []
    for v in m.v_basis:
        by_comp: dict = {}
        for flat, c in v.items():
            comp, idx = divmod(flat, src.dim)
            by_comp.setdefault(comp, {})[idx] = c
        lift: dict = {}
        for comp, vec in by_comp.items():
            coords = _express(vec, src_basis, fld)
            for which, cc in coords.items():
                target_rep = reps[which]
                for k, c in target_rep.items():
                    key = comp * pair.dim + k
                    acc = fld.add(lift.get(key, fld.zero()), fld.mul(cc, c))
                    if fld.is_zero(acc):
                        lift.pop(key, None)
                    else:
                        lift[key] = acc
        v_basis.append(lift)
    for comp in range(m.rank):
        for row in mac.rows:
            v_basis.append({comp * pair.dim + k: c for k, c in row.items()})
    return v_basis


def lift_module(m: PairModule, square: ConductorSquare,
                precision: int | None = None) -> LiftedModulePresentation:
    """Pull the pair module back to an R-module of constant rank inside S^r.

    The module is generated by lifts of a V-basis together with the
    conductor columns; nu and a presentation are computed on jets.
    """
    pair = square.pair
    if pair.degenerate:
        raise MismatchedSquareError("degenerate conductor square")
    fld = pair.field
    if m.pair is pair or m.pair.table == pair.table:
        v_vectors = [dict(v) for v in m.v_basis]
    elif m.pair.dim_a == 1 and m.pair.dim == 3:
        v_vectors = _transport_v_basis(m, square)
    else:
        raise MismatchedSquareError(
            "module pair matches neither the square nor its reduced form")
    rank = m.rank
    from .pairs import ExtensionJets

    p_l = min(square.precision, precision if precision else 11)
    jets = ExtensionJets(square.ext, p_l)
    idx = jets.idx
    n_mono = len(idx)

    # S-coordinate lifts of the B basis
    def b_to_s(vec: dict):
        coords = list(jets.zero_coords())
        for b_idx, c in vec.items():
            rep = square.b_basis_coords[b_idx]
            for gi, r in enumerate(rep):
                coords[gi] = coords[gi] + r.truncate(min(r.precision, p_l)).scale(c)
        return tuple(coords)

    gens = []
    for v in v_vectors:
        comps = [dict() for _ in range(rank)]
        for flat, c in v.items():
            comp, idx_b = divmod(flat, pair.dim)
            comps[comp][idx_b] = c
        gens.append(tuple(b_to_s(comp_vec) for comp_vec in comps))
    zero_coords = jets.zero_coords()
    for c in square.conductor_generators:
        c_l = c.truncate(min(c.precision, p_l))
        c_coords = list(zero_coords)
        c_coords[0] = c_l
        for comp in range(rank):
            vec = [zero_coords] * rank
            vec[comp] = tuple(c_coords)
            gens.append(tuple(vec))

    # numerator series per generator component, for cheap monomial shifting
    base_numerators = []
    for g in gens:
        base_numerators.append([jets.numerator_series(comp) for comp in g])

    def flat_vector(nums, mono):
        vec: dict = {}
        for comp, s in enumerate(nums):
            comp_vec: dict = {}
            for e, c in s.coeffs.items():
                e2 = (e[0] + mono[0], e[1] + mono[1])
                if sum(e2) < p_l:
                    i = idx.index(e2)
                    acc = fld.add(comp_vec.get(i, fld.zero()), c)
                    if fld.is_zero(acc):
                        comp_vec.pop(i, None)
                    else:
                        comp_vec[i] = acc
            comp_vec = jets.ring.reduce_vector(comp_vec)
            for i, c in comp_vec.items():
                vec[comp * n_mono + i] = c
        return vec

    span = RowSpace(fld)
    for nums in base_numerators:
        for d in range(1, p_l):
            for mono in monomials_of_degree(2, d):
                v = flat_vector(nums, mono)
                if v:
                    span.insert(v)
    rank_m_part = span.rank
    minimal = []
    for g, nums in zip(gens, base_numerators):
        v = flat_vector(nums, (0, 0))
        if v and span.insert(v):
            minimal.append((g, nums))
    nu = span.rank - rank_m_part

    # presentation: relations among the minimal generators
    forms: dict = {}
    for t, (_, nums) in enumerate(minimal):
        for m_i, mono in enumerate(idx.exponents):
            u = t * n_mono + m_i
            img = flat_vector(nums, mono)
            for coord, c in img.items():
                forms.setdefault(coord, {})[u] = c
    rel_space = kernel_rowspace(list(forms.values()), range(nu * n_mono), fld)
    relations = [dict(r) for r in rel_space.rows]
    mult_span = RowSpace(fld)
    for rho in relations:
        for shift in ((1, 0), (0, 1)):
            shifted: dict = {}
            for u, c in rho.items():
                t, m_i = divmod(u, n_mono)
                e = idx.exponent(m_i)
                e2 = (e[0] + shift[0], e[1] + shift[1])
                if sum(e2) < p_l:
                    shifted[t * n_mono + idx.index(e2)] = c
            if shifted:
                mult_span.insert(shifted)
    rel_gens = []
    probe = mult_span.copy()
    for rho in sorted(relations,
                      key=lambda r: min(sum(idx.exponent(u % n_mono)) for u in r)):
        if probe.insert(dict(rho)):
            rel_gens.append(rho)
    columns = []
    for rho in rel_gens:
        col = []
        for t in range(nu):
            coeffs = {}
            for u, c in rho.items():
                tt, m_i = divmod(u, n_mono)
                if tt == t:
                    coeffs[idx.exponent(m_i)] = c
            col.append(TruncatedSeries(jets.variables, fld, p_l, coeffs, False))
        columns.append(col)
    from .mf import PresentationMatrix

    if columns:
        matrix = tuple(tuple(columns[j][t] for j in range(len(columns)))
                       for t in range(nu))
    else:
        matrix = tuple(() for _ in range(nu))
    no_units = all(not e.is_unit() for row in matrix for e in row)
    presentation = PresentationMatrix(
        ring_equation=jets.ring.f, matrix=matrix, minimized=no_units)
    return LiftedModulePresentation(
        rank=rank, generators=[g for g, _ in minimal], nu=nu,
        presentation=presentation, precision=p_l)
