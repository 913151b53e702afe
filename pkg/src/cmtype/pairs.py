"""Finite birational extensions, conductor squares, and Artinian pairs.

An extension S of R = k[[x,y]]/(f) is specified by fractions g_i =
num_i / x^{k_i} together with a multiplication table expressing each
product g_i g_j over the module generators 1, g_1, ..., g_t.  Elements of
S are coordinate tuples over R; equality is decided through numerators
over the common denominator x^D at the jet level, so every computation
below is exact linear algebra over the coefficient field.

The conductor (R : S) is the kernel of r |-> (r g_i mod R)_i on jets; the
quotients A = R/c and B = S/c come out as finite-dimensional algebras
with explicit structure constants, and lifting data (representatives of
the B-basis inside S) is retained for the pullback construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

from .errors import (
    InconsistentTableError,
    ParseError,
    PrecisionInsufficientError,
)
from .fields import FieldSpec, QQ
from .jets import JetRing, monomials_of_degree
from .linalg import RowSpace, kernel_rowspace
from .parser import parse_series
from .series import TruncatedSeries


# ---------------------------------------------------------------------------
# extension specifications


@dataclass(frozen=True)
class ExtensionGenerator:
    name: str
    numerator: TruncatedSeries
    denom_power: int


@dataclass
class FiniteExtensionSpec:
    base_equation: TruncatedSeries
    generators: list
    # relations[(i, j)] = coefficients (c_0, ..., c_t) with g_i g_j = sum c_l g_l
    relations: dict

    @property
    def count(self) -> int:
        return len(self.generators)

    def default_precision(self) -> int:
        dmax = max([g.denom_power for g in self.generators], default=0)
        return 2 * max(self.base_equation.total_degree(), 1) + dmax + 4


def _series(text, field, precision, variables=("x", "y")):
    return parse_series(text, variables, field, precision)


def extension_identity(field: FieldSpec = QQ, precision: int = 12) -> FiniteExtensionSpec:
    """S = R itself; the conductor square degenerates."""
    f = _series("y^3", field, precision)
    return FiniteExtensionSpec(base_equation=f, generators=[], relations={})


def extension_cusp_cube(field: FieldSpec = QQ, precision: int | None = None) -> FiniteExtensionSpec:
    """f = y^3 with S = R[y/x^2] = R + R(y/x^2) + R(y^2/x^4);
    the adjoined elements satisfy u1^2 = u2, u1 u2 = u2^2 = 0."""
    if precision is None:
        precision = 14
    f = _series("y^3", field, precision)
    u1 = ExtensionGenerator("u1", _series("y", field, precision), 2)
    u2 = ExtensionGenerator("u2", _series("y^2", field, precision), 4)
    zero = TruncatedSeries.zero(("x", "y"), field, precision)
    one = TruncatedSeries.one(("x", "y"), field, precision)
    relations = {
        (1, 1): (zero, zero, one),
        (1, 2): (zero, zero, zero),
        (2, 2): (zero, zero, zero),
    }
    return FiniteExtensionSpec(base_equation=f, generators=[u1, u2], relations=relations)


def extension_double_line(field: FieldSpec = QQ, precision: int | None = None,
                          q: TruncatedSeries | None = None) -> FiniteExtensionSpec:
    """f = y^2(y+q) with q of order >= 2 in k[[x]] (default q = x^2), and
    S = R[u, v] for u = y/x^2, v = (y^2+qy)/x^5, with relations
    u^2 = xv - (q/x^2) u and uv = v^2 = 0."""
    if precision is None:
        precision = 16
    if q is None:
        q = _series("x^2", field, precision)
    else:
        q = q.extend_variables(("x", "y")) if q.variables != ("x", "y") else q
        q = q.truncate(min(q.precision, precision)) if q.precision != precision else q
    if q.order() is None or q.order() < 2:
        raise ValueError("q must have order >= 2")
    y = _series("y", field, precision)
    f = y * y * (y + q)
    num_v = y * y + q * y
    u = ExtensionGenerator("u", y, 2)
    v = ExtensionGenerator("v", num_v, 5)
    # q/x^2 by exponent shift (q is divisible by x^2)
    q_over_x2 = TruncatedSeries(
        ("x", "y"), field, precision,
        {(e[0] - 2, e[1]): c for e, c in q.coeffs.items()}, q.exact)
    zero = TruncatedSeries.zero(("x", "y"), field, precision)
    x = _series("x", field, precision)
    relations = {
        (1, 1): (zero, -q_over_x2, x),
        (1, 2): (zero, zero, zero),
        (2, 2): (zero, zero, zero),
    }
    return FiniteExtensionSpec(base_equation=f, generators=[u, v], relations=relations)


def parse_extension(text: str, field: FieldSpec, precision: int,
                    base_equation: str | TruncatedSeries) -> FiniteExtensionSpec:
    """Text format: one generator per line as "name = numerator / x^k";
    afterwards relations as "name*name = R-combination" where the
    combination is linear in the generator names over polynomials in x, y."""
    if isinstance(base_equation, str):
        f = _series(base_equation, field, precision)
    else:
        f = base_equation
    generators: list[ExtensionGenerator] = []
    relation_lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        lhs, _, rhs = line.partition("=")
        lhs, rhs = lhs.strip(), rhs.strip()
        if not rhs:
            raise ParseError(f"missing '=' in extension line {line!r}")
        if "*" in lhs:
            relation_lines.append((lhs, rhs))
            continue
        num_text, _, den_text = rhs.partition("/")
        if not den_text:
            raise ParseError(f"generator {lhs!r} needs a '/ x^k' denominator")
        den_text = den_text.strip().replace(" ", "")
        if den_text == "x":
            k = 1
        elif den_text.startswith("x^"):
            k = int(den_text[2:])
        else:
            raise ParseError(f"denominator must be a power of x, got {den_text!r}")
        numerator = _series(num_text.strip(), field, precision)
        generators.append(ExtensionGenerator(lhs, numerator, k))
    names = [g.name for g in generators]
    ext_vars = ("x", "y") + tuple(names)
    zero = TruncatedSeries.zero(("x", "y"), field, precision)
    relations = {}
    for lhs, rhs in relation_lines:
        a, _, b = lhs.partition("*")
        a, b = a.strip(), b.strip()
        if a not in names or b not in names:
            raise ParseError(f"unknown generator in relation {lhs!r}")
        i, j = names.index(a) + 1, names.index(b) + 1
        combo = parse_series(rhs, ext_vars, field, precision)
        coeffs = [zero] * (len(names) + 1)
        for e, c in combo.coeffs.items():
            gen_part = e[2:]
            if sum(gen_part) == 0:
                idx = 0
            elif sum(gen_part) == 1:
                idx = gen_part.index(1) + 1
            else:
                raise ParseError(f"relation {lhs!r} is not linear in the generators")
            mono = TruncatedSeries.monomial(e[:2], c, ("x", "y"), field, precision)
            coeffs[idx] = coeffs[idx] + mono
        relations[(min(i, j), max(i, j))] = tuple(coeffs)
    for i in range(1, len(names) + 1):
        for j in range(i, len(names) + 1):
            if (i, j) not in relations:
                raise ParseError(f"missing relation for {names[i-1]}*{names[j-1]}")
    return FiniteExtensionSpec(base_equation=f, generators=generators,
                               relations=relations)


# ---------------------------------------------------------------------------
# jet-level model of S


class ExtensionJets:
    """Coordinate arithmetic for S = R + sum R g_i below a precision.

    Coordinates are (t+1)-tuples of series; the numerator of (r_0..r_t) is
    sum r_i num_i x^{D-k_i}, representing the element over the common
    denominator x^D.  Membership questions reduce to row-space membership
    of numerator vectors modulo the jet ideal of f.
    """

    def __init__(self, ext: FiniteExtensionSpec, precision: int):
        self.ext = ext
        self.precision = precision
        f = ext.base_equation
        if f.precision < precision:
            if not f.exact:
                raise PrecisionInsufficientError("extension equation too shallow",
                                                 suggested=precision)
            f = f.truncate(precision)
        elif f.precision > precision:
            f = f.truncate(precision)
        self.ring = JetRing(f, precision)
        self.field = f.field
        self.variables = f.variables
        self.idx = self.ring.idx
        self.D = max([g.denom_power for g in ext.generators], default=0)
        one = TruncatedSeries.one(self.variables, self.field, precision)
        self.numerators = [one] + [g.numerator.truncate(min(g.numerator.precision, precision))
                                   for g in ext.generators]
        self.shifts = [self.D] + [self.D - g.denom_power for g in ext.generators]
        if any(s < 0 for s in self.shifts):
            raise ValueError("denominator powers exceed the common denominator")
        # shifted numerators num_i * x^(D - k_i)
        x_exp = []
        for num, s in zip(self.numerators, self.shifts):
            coeffs = {}
            for e, c in num.coeffs.items():
                e2 = (e[0] + s,) + e[1:]
                if sum(e2) < precision:
                    coeffs[e2] = c
            x_exp.append(TruncatedSeries(self.variables, self.field, precision,
                                         coeffs, False))
        self.shifted = x_exp
        self._check_table()

    @property
    def count(self) -> int:
        return len(self.numerators)

    def zero_coords(self):
        z = TruncatedSeries.zero(self.variables, self.field, self.precision)
        return tuple(z for _ in range(self.count))

    def unit_coords(self):
        coords = list(self.zero_coords())
        coords[0] = TruncatedSeries.one(self.variables, self.field, self.precision)
        return tuple(coords)

    def numerator_series(self, coords) -> TruncatedSeries:
        acc = TruncatedSeries.zero(self.variables, self.field, self.precision)
        for r, sh in zip(coords, self.shifted):
            if not r.is_zero():
                acc = acc + r * sh
        return acc

    def numerator_vector(self, coords) -> dict:
        """Reduced jet vector of the numerator (canonical modulo f)."""
        return self.ring.reduce(self.numerator_series(coords))

    def multiply(self, a, b):
        """Product of coordinate tuples via the relation table."""
        fld = self.field
        zero = TruncatedSeries.zero(self.variables, fld, self.precision)
        out = [zero] * self.count
        for i, ai in enumerate(a):
            if ai.is_zero():
                continue
            for j, bj in enumerate(b):
                if bj.is_zero():
                    continue
                prod = ai * bj
                if i == 0:
                    out[j] = out[j] + prod
                elif j == 0:
                    out[i] = out[i] + prod
                else:
                    key = (min(i, j), max(i, j))
                    for l, cl in enumerate(self.ext.relations[key]):
                        if not cl.is_zero():
                            out[l] = out[l] + prod * cl
        return tuple(out)

    def scale_coords(self, coords, r: TruncatedSeries):
        return tuple(c * r for c in coords)

    def _check_table(self):
        """Consistency of the table against the fractions: for each relation,
        num_i num_j x^{2D-k_i-k_j} must agree with the numerator of the
        declared combination times x^D, modulo f below precision."""
        t = self.count - 1
        for i in range(1, t + 1):
            for j in range(i, t + 1):
                key = (i, j)
                if key not in self.ext.relations:
                    raise InconsistentTableError(f"missing relation {key}")
                lhs_coeffs = {}
                ki = self.ext.generators[i - 1].denom_power
                kj = self.ext.generators[j - 1].denom_power
                prod = self.numerators[i] * self.numerators[j]
                shift = 2 * self.D - ki - kj
                for e, c in prod.coeffs.items():
                    e2 = (e[0] + shift,) + e[1:]
                    if sum(e2) < self.precision:
                        lhs_coeffs[e2] = c
                lhs = TruncatedSeries(self.variables, self.field, self.precision,
                                      lhs_coeffs, False)
                combo = self.ext.relations[key]
                rhs_coords = tuple(combo)
                rhs = self.numerator_series(rhs_coords)
                # rhs is over x^D; lhs over x^2D was shifted by 2D-ki-kj, so
                # compare lhs with rhs * x^D shifted consistently: both sides
                # above represent x^{2D} (g_i g_j); rhs needs one more x^D.
                rhs_coeffs = {}
                for e, c in rhs.coeffs.items():
                    e2 = (e[0] + self.D,) + e[1:]
                    if sum(e2) < self.precision:
                        rhs_coeffs[e2] = c
                rhs_shifted = TruncatedSeries(self.variables, self.field,
                                              self.precision, rhs_coeffs, False)
                if self.ring.reduce(lhs - rhs_shifted):
                    raise InconsistentTableError(
                        f"relation for generators {key} disagrees with the fractions")

    # -- spans -------------------------------------------------------------

    def module_span(self, elements, min_deg: int = 0) -> RowSpace:
        """Row space of numerator vectors of monomial * element for all
        monomials of degree >= min_deg (and < precision)."""
        span = RowSpace(self.field)
        fld = self.field
        for coords in elements:
            base = self.numerator_series(coords)
            base_vec = self.ring.reduce(base)
            if min_deg == 0 and base_vec:
                span.insert(base_vec)
            if not base.coeffs:
                continue
            start = max(min_deg, 1) if min_deg == 0 else min_deg
            for d in range(start, self.precision):
                for m in monomials_of_degree(2, d):
                    vec = {}
                    for e, c in base.coeffs.items():
                        e2 = (e[0] + m[0], e[1] + m[1])
                        if sum(e2) < self.precision:
                            i = self.idx.index(e2)
                            acc = fld.add(vec.get(i, fld.zero()), c)
                            if fld.is_zero(acc):
                                vec.pop(i, None)
                            else:
                                vec[i] = acc
                    if vec:
                        vec = self.ring.reduce_vector(vec)
                        if vec:
                            span.insert(vec)
        return span

    def generator_elements(self):
        """Coordinate tuples of 1, g_1, ..., g_t."""
        out = []
        one = TruncatedSeries.one(self.variables, self.field, self.precision)
        for i in range(self.count):
            coords = list(self.zero_coords())
            coords[i] = one
            out.append(tuple(coords))
        return out


# ---------------------------------------------------------------------------
# the numerical pair invariants


def pair_invariants(ext: FiniteExtensionSpec, precision: int | None = None):
    """(nu_R(S), dim_k mS/(m^2 S + m)): the minimal generator count of S
    over R and the non-cyclicity witness of mS/m."""
    if precision is None:
        precision = ext.default_precision()
    jets = ExtensionJets(ext, precision)
    gens = jets.generator_elements()
    span_s = jets.module_span(gens, min_deg=0)
    span_ms = jets.module_span(gens, min_deg=1)
    nu = span_s.rank - span_ms.rank
    span_m2s_m = jets.module_span(gens, min_deg=2)
    span_m2s_m.insert_all(jets.module_span([jets.unit_coords()], min_deg=1).rows)
    codim = span_ms.rank - span_m2s_m.rank
    return nu, codim


# ---------------------------------------------------------------------------
# Artinian pairs


@dataclass
class ArtinianPair:
    """A module-finite extension of Artinian algebras A -> B over k.

    B is given by structure constants on a basis (table[i][j] are the
    coordinates of b_i b_j); the image of A is the span of a_basis, with
    a_radical spanning the image of the maximal ideal of A.
    """

    field: FieldSpec
    table: tuple
    one: dict
    a_basis: tuple
    a_radical: tuple
    labels: tuple
    degenerate: bool = False

    @property
    def dim(self) -> int:
        return len(self.table)

    @property
    def dim_a(self) -> int:
        rs = RowSpace(self.field)
        rs.insert_all(self.a_basis)
        return rs.rank

    def mul(self, v: dict, w: dict) -> dict:
        fld = self.field
        out: dict = {}
        for i, a in v.items():
            row = self.table[i]
            for j, b in w.items():
                coeff = fld.mul(a, b)
                for l, c in row[j].items():
                    acc = fld.add(out.get(l, fld.zero()), fld.mul(coeff, c))
                    if fld.is_zero(acc):
                        out.pop(l, None)
                    else:
                        out[l] = acc
        return out

    def radical_b_span(self) -> RowSpace:
        """Span of m_A * B inside B."""
        span = RowSpace(self.field)
        for a in self.a_radical:
            for j in range(self.dim):
                span.insert(self.mul(a, {j: self.field.one()}))
        return span

    def nu_a_of_b(self) -> int:
        """Minimal generators of B as an A-module (dim of B / m_A B)."""
        return self.dim - self.radical_b_span().rank

    def noncyclicity(self) -> int:
        """dim of (m_A B) / (m_A^2 B + m_A): >= 2 exactly when m_A B / m_A is
        not cyclic over A."""
        fld = self.field
        mab = self.radical_b_span()
        small = RowSpace(fld)
        for a in self.a_radical:
            for a2 in self.a_radical:
                for j in range(self.dim):
                    small.insert(self.mul(self.mul(a, a2), {j: fld.one()}))
            small.insert(dict(a))
        return mab.rank - small.rank

    def validate(self):
        fld = self.field
        aspan = RowSpace(fld)
        aspan.insert_all([dict(v) for v in self.a_basis])
        if not aspan.contains(self.one):
            raise ValueError("1 is not in the image of A")
        for v in self.a_basis:
            for w in self.a_basis:
                if not aspan.contains(self.mul(v, w)):
                    raise ValueError("image of A is not closed under multiplication")
        radspan = RowSpace(fld)
        radspan.insert_all([dict(v) for v in self.a_radical])
        if radspan.rank != aspan.rank - 1:
            raise ValueError("A is not local with residue field k")
        for v in self.a_radical:
            for w in self.a_basis:
                if not radspan.contains(self.mul(v, w)):
                    raise ValueError("m_A is not an ideal of A")


def pair_k_into_small_fat_point(field: FieldSpec = QQ) -> ArtinianPair:
    """The pair k -> k[x,y]/(x^2, xy, y^2), the reduced form behind the
    multiplicity-three constructions."""
    one = field.one()
    zero: dict = {}
    e0 = {0: one}
    table = (
        ({0: one}, {1: one}, {2: one}),
        ({1: one}, zero, zero),
        ({2: one}, zero, zero),
    )
    return ArtinianPair(field=field, table=table, one=dict(e0),
                        a_basis=(dict(e0),), a_radical=(),
                        labels=("1", "a", "b"))


# ---------------------------------------------------------------------------
# conductor squares


@dataclass
class ConductorSquare:
    ext: FiniteExtensionSpec
    pair: ArtinianPair
    precision: int
    conductor_generators: list
    description: str
    # lifting data
    jets: ExtensionJets = None
    b_basis_coords: list = dataclass_field(default_factory=list)
    conductor_span: RowSpace = None
    kernel_b: RowSpace = None


def _conductor_span(jets: ExtensionJets) -> RowSpace:
    """Jet span of (R : S) = {r : r g_i in R for all i}."""
    fld = jets.field
    idx = jets.idx
    n = len(idx)
    ext = jets.ext
    if not ext.generators:
        span = RowSpace(fld)
        for i in range(n):
            span.insert({i: fld.one()})
        return span
    # per-generator target subspaces: x^{k_i} R + (f)
    targets = []
    for g in ext.generators:
        t = RowSpace(fld)
        t.insert_all(dict(r) for r in jets.ring.ideal.rows)
        for i, e in enumerate(idx.exponents):
            if e[0] >= g.denom_power:
                t.insert({i: fld.one()})
        targets.append(t)
    constraints = []
    width = n
    for col, m in enumerate(idx.exponents):
        row: dict = {}
        for gi, g in enumerate(ext.generators):
            vec = {}
            for e, c in g.numerator.coeffs.items():
                e2 = (e[0] + m[0], e[1] + m[1])
                if sum(e2) < jets.precision:
                    i = idx.index(e2)
                    acc = fld.add(vec.get(i, fld.zero()), c)
                    if fld.is_zero(acc):
                        vec.pop(i, None)
                    else:
                        vec[i] = acc
            resid = targets[gi].reduce(vec)
            for i, c in resid.items():
                row[gi * width + i] = c
        if row:
            constraints.append((col, row))
    # transpose: constraints are linear forms on the monomial coefficients
    by_condition: dict = {}
    for col, row in constraints:
        for cond, c in row.items():
            by_condition.setdefault(cond, {})[col] = c
    return kernel_rowspace(list(by_condition.values()), range(n), fld)


def _minimal_ideal_generators(span: RowSpace, jets: ExtensionJets):
    """Representatives of a minimal generating set of the ideal whose jet
    span is given (dim of span / (m*span + (f)) picks them out)."""
    fld = jets.field
    idx = jets.idx
    reps = []
    for r in span.rows:
        reduced = jets.ring.reduce_vector(dict(r))
        if reduced:
            reps.append(reduced)
    msub = RowSpace(fld)
    msub.insert_all(dict(r) for r in jets.ring.ideal.rows)
    for r in reps:
        for d in range(1, jets.precision):
            for m in monomials_of_degree(2, d):
                vec = {}
                for i, c in r.items():
                    e = idx.exponent(i)
                    e2 = (e[0] + m[0], e[1] + m[1])
                    if sum(e2) < jets.precision:
                        k = idx.index(e2)
                        acc = fld.add(vec.get(k, fld.zero()), c)
                        if fld.is_zero(acc):
                            vec.pop(k, None)
                        else:
                            vec[k] = acc
                vec = jets.ring.reduce_vector(vec)
                if vec:
                    msub.insert(vec)
    gens = []
    probe = msub.copy()
    for r in sorted(reps, key=lambda r: min(sum(idx.exponent(i)) for i in r)):
        if probe.insert(dict(r)):
            gens.append(jets.ring.series(r))
    return gens


def conductor_square(ext: FiniteExtensionSpec,
                     precision: int | None = None) -> ConductorSquare:
    """Compute the conductor square of R -> S.

    The jet-level conductor must be stable across two consecutive precision
    increments (compared through the canonical monomial cosets of A and B);
    otherwise a PrecisionInsufficientError asks for a deeper run.
    """
    if precision is None:
        precision = ext.default_precision()
    built = []
    for p in (precision, precision + 1):
        jets = ExtensionJets(ext, p)
        cspan = _conductor_span(jets)
        built.append((jets, cspan))
    descriptors = []
    for jets, cspan in built:
        quot = RowSpace(jets.field)
        quot.insert_all(dict(r) for r in jets.ring.ideal.rows)
        quot.insert_all(dict(r) for r in cspan.rows)
        free = [jets.idx.exponent(i) for i in quot.free_columns(range(len(jets.idx)))]
        descriptors.append(sorted(free))
    if descriptors[0] != descriptors[1]:
        raise PrecisionInsufficientError(
            "conductor did not stabilize across consecutive precisions",
            suggested=precision + 4)
    jets, cspan = built[1]
    fld = jets.field
    a_monomials = descriptors[1]
    degenerate = len(a_monomials) == 0

    # quotient B = S / c on coordinate space: kernel of coords -> numerator
    # modulo (x^D c + (f))
    n = len(jets.idx)
    target = RowSpace(fld)
    target.insert_all(dict(r) for r in jets.ring.ideal.rows)
    for r in cspan.rows:
        vec = {}
        for i, c in r.items():
            e = jets.idx.exponent(i)
            e2 = (e[0] + jets.D, e[1])
            if sum(e2) < jets.precision:
                vec[jets.idx.index(e2)] = c
        vec = jets.ring.reduce_vector(vec)
        if vec:
            target.insert(vec)
    constraints_by_cond: dict = {}
    count = jets.count
    for gi in range(count):
        shifted = jets.shifted[gi]
        for m_i, m in enumerate(jets.idx.exponents):
            flat = gi * n + m_i
            vec = {}
            for e, c in shifted.coeffs.items():
                e2 = (e[0] + m[0], e[1] + m[1])
                if sum(e2) < jets.precision:
                    i = jets.idx.index(e2)
                    acc = fld.add(vec.get(i, fld.zero()), c)
                    if fld.is_zero(acc):
                        vec.pop(i, None)
                    else:
                        vec[i] = acc
            resid = target.reduce(vec)
            for cond, c in resid.items():
                constraints_by_cond.setdefault(cond, {})[flat] = c
    kernel_b = kernel_rowspace(list(constraints_by_cond.values()),
                               range(count * n), fld)
    b_cols = kernel_b.free_columns(range(count * n))
    dim_b = len(b_cols)
    col_of = {c: i for i, c in enumerate(b_cols)}

    def to_b_coords(flat_vec: dict) -> dict:
        resid = kernel_b.reduce(flat_vec)
        return {col_of[c]: v for c, v in resid.items()}

    def coords_to_flat(coords) -> dict:
        flat = {}
        for gi, r in enumerate(coords):
            for e, c in r.coeffs.items():
                i = jets.idx.lookup.get(e)
                if i is not None:
                    flat[gi * n + i] = fld.add(flat.get(gi * n + i, fld.zero()), c)
        return {k: v for k, v in flat.items() if not fld.is_zero(v)}

    # representatives of the B basis as coordinate tuples
    b_reps = []
    for c in b_cols:
        gi, m_i = divmod(c, n)
        coords = list(jets.zero_coords())
        coords[gi] = TruncatedSeries.monomial(jets.idx.exponent(m_i), fld.one(),
                                              jets.variables, fld, jets.precision)
        b_reps.append(tuple(coords))

    table = []
    for i in range(dim_b):
        row = []
        for j in range(dim_b):
            prod = jets.multiply(b_reps[i], b_reps[j])
            row.append(to_b_coords(coords_to_flat(prod)))
        table.append(tuple(row))
    one_b = to_b_coords(coords_to_flat(jets.unit_coords()))

    def embed_monomial(e) -> dict:
        coords = list(jets.zero_coords())
        coords[0] = TruncatedSeries.monomial(e, fld.one(), jets.variables, fld,
                                             jets.precision)
        return to_b_coords(coords_to_flat(tuple(coords)))

    a_basis = tuple(embed_monomial(e) for e in a_monomials)
    a_radical = tuple(embed_monomial(e) for e in a_monomials if sum(e) >= 1)

    labels = []
    gen_names = ["1"] + [g.name for g in ext.generators]
    for c in b_cols:
        gi, m_i = divmod(c, n)
        e = jets.idx.exponent(m_i)
        mono = "*".join(filter(None, [
            f"x^{e[0]}" if e[0] else "", f"y^{e[1]}" if e[1] else ""])) or "1"
        labels.append(f"{mono}*{gen_names[gi]}" if gi else mono)

    pair = ArtinianPair(field=fld, table=tuple(table), one=one_b,
                        a_basis=a_basis, a_radical=a_radical,
                        labels=tuple(labels), degenerate=degenerate)
    if not degenerate:
        pair.validate()
    cond_gens = _minimal_ideal_generators(cspan, jets) if not degenerate else []
    gen_text = ", ".join(str(g) for g in cond_gens) if cond_gens else "(1)"
    description = (
        f"conductor generated by {gen_text}; dim_k A = {len(a_monomials)}, "
        f"dim_k B = {dim_b}; stabilized at precision {jets.precision}")
    return ConductorSquare(ext=ext, pair=pair, precision=jets.precision,
                           conductor_generators=cond_gens, description=description,
                           jets=jets, b_basis_coords=b_reps,
                           conductor_span=cspan, kernel_b=kernel_b)
