"""Decision tree for the Cohen-Macaulay representation type of a
hypersurface germ k[[x_0..x_d]]/(f).

In dimension >= 2 (characteristic != 2) the verdict reduces to a plane
curve: order 1 is regular, order >= 3 is unbounded, and order 2 splits a
square off and recurses on the residual germ in one fewer variable.  In
dimension 1 the multiplicity e = ord(f) drives the answer: e = 2 rings
are bounded (finite A_n when a residual one-variable coefficient is
nonzero, the A-infinity ring otherwise), e = 3 splits by the tangent
cone pattern and reducedness into D/E normal forms, the D-infinity ring,
or unbounded type, and e >= 4 is always unbounded.

Generator bounds: finite type away from characteristic 2, 3, 5 carries
the bound 6*2^(d-1); bounded-but-infinite type carries 2^d with the
dimension-one value 2; regular germs need a single generator.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

from .errors import (
    CharacteristicTwoError,
    PrecisionInsufficientError,
    SmallCharacteristicError,
    UnsupportedCharacteristicError,
    ZeroOrUnitInputError,
)
from .local import (
    DBL,
    SQF3,
    TRP,
    SplitResult,
    is_reduced_local,
    milnor_number,
    split_one_square,
    tangent_cone_pattern,
)
from .series import TruncatedSeries

FINITE = "finite"
BOUNDED_INFINITE = "bounded-infinite"
UNBOUNDED = "unbounded"
UNDETERMINED = "undetermined"

REGULAR = "regular"
A_INFINITY = "Ainfinity"
D_INFINITY = "Dinfinity"


def default_precision(f: TruncatedSeries) -> int:
    """2*(total degree) + 6, the working precision that covers Weierstrass
    division and Nakayama certification for polynomial inputs."""
    return 2 * max(f.total_degree(), 1) + 6


@dataclass
class CMTypeReport:
    verdict: str
    normal_form: str | None
    dimension: int
    multiplicity: int
    generator_bound: int | None
    witness: list = dataclass_field(default_factory=list)
    precision_used: int = 0
    undetermined_reason: str | None = None
    split: SplitResult | None = None

    def to_json_dict(self, input_text: str, field_name: str) -> dict:
        return {
            "input": input_text,
            "field": field_name,
            "dimension": self.dimension,
            "multiplicity": self.multiplicity,
            "verdict": self.verdict,
            "normal_form": self.normal_form,
            "generator_bound": self.generator_bound,
            "witness": list(self.witness),
            "precision_used": self.precision_used,
        }


def _finite_bound(d: int, normal_form: str, characteristic: int) -> int:
    if normal_form == REGULAR:
        return 1
    if characteristic in (2, 3, 5):
        # only the multiplicity-2 chain reaches a finite verdict here:
        # its modules are 2-generated and each square doubles the bound
        return 2 ** d
    return 6 * 2 ** (d - 1)


def _verdict_order_two(cur: TruncatedSeries, witness: list):
    """Dimension-one, multiplicity-two germs: complete the square down to
    one variable; the order of the residual coefficient is the whole story."""
    fld = cur.field
    if fld.characteristic == 2:
        if not cur.exact:
            return UNDETERMINED, None, "characteristic 2 multiplicity-2 germ with inexact coefficients"
        try:
            reduced = is_reduced_local(cur)
        except UnsupportedCharacteristicError as exc:
            return UNDETERMINED, None, str(exc)
        if reduced:
            witness.append("reduced multiplicity-2 germ: finite A-type "
                           "(index not computed in characteristic 2)")
            return FINITE, "A", None
        witness.append("non-reduced multiplicity-2 germ")
        return BOUNDED_INFINITE, A_INFINITY, None
    residual, step = split_one_square(cur)
    m = residual.order()
    if m is None:
        if residual.exact:
            witness.append(f"{step.var}^2 splits off with zero residual: "
                           "the A-infinity germ")
            return BOUNDED_INFINITE, A_INFINITY, None
        raise PrecisionInsufficientError(
            "residual of the square is zero below precision but not certified zero",
            suggested=2 * cur.precision)
    witness.append(f"completing the square leaves a coefficient of order {m}: A_{m - 1}")
    return FINITE, f"A{m - 1}", None


def _verdict_order_three(cur: TruncatedSeries, witness: list):
    fld = cur.field
    p = fld.characteristic
    try:
        pattern = tangent_cone_pattern(cur).tag
    except SmallCharacteristicError as exc:
        return UNDETERMINED, None, str(exc)
    witness.append(f"cubic leading form pattern: {pattern}")
    # decide reducedness
    if cur.exact:
        try:
            reduced = is_reduced_local(cur)
        except UnsupportedCharacteristicError as exc:
            return UNDETERMINED, None, str(exc)
        mu = None
    else:
        try:
            mn = milnor_number(cur)
        except PrecisionInsufficientError:
            if p == 0:
                raise
            return UNDETERMINED, None, (
                f"Milnor certification failed in characteristic {p}; "
                "the germ may be non-reduced or the partials degenerate")
        reduced, mu = mn.finite, mn.value
    if not reduced:
        if pattern == DBL:
            witness.append("non-reduced with a distinct simple tangent: the D-infinity germ")
            return BOUNDED_INFINITE, D_INFINITY, None
        if pattern == TRP:
            witness.append("non-reduced with a triple tangent: unbounded "
                           "(big indecomposables over a finite birational extension)")
            return UNBOUNDED, None, None
        raise AssertionError("non-reduced cubic with squarefree tangent cone")
    if p == 5:
        return UNDETERMINED, None, (
            "reduced multiplicity-3 normal forms are not classified here in "
            "characteristic 5")
    if pattern == SQF3:
        witness.append("three distinct tangents: D_4")
        return FINITE, "D4", None
    if mu is None:
        try:
            mn = milnor_number(cur)
        except PrecisionInsufficientError:
            if p == 0:
                raise
            return UNDETERMINED, None, (
                f"Milnor certification failed in characteristic {p}")
        if not mn.finite:
            raise AssertionError("reduced germ with infinite Milnor number")
        mu = mn.value
    if pattern == DBL:
        witness.append(f"double tangent, Milnor number {mu}: D_{mu}")
        return FINITE, f"D{mu}", None
    # triple tangent, reduced
    if mu in (6, 7, 8):
        witness.append(f"triple tangent, Milnor number {mu}: E_{mu}")
        return FINITE, f"E{mu}", None
    witness.append(f"triple tangent with Milnor number {mu}: "
                   "outside the simple normal forms, unbounded")
    return UNBOUNDED, None, None


def _verdict_dimension_one(cur: TruncatedSeries, witness: list):
    """Returns (verdict, normal_form, undetermined_reason)."""
    e = cur.order()
    if e is None:
        if cur.exact:
            raise ZeroOrUnitInputError("zero germ")
        raise PrecisionInsufficientError(
            "germ is zero below precision", suggested=2 * cur.precision)
    if e == 0:
        raise ZeroOrUnitInputError("unit germ defines no singularity")
    if e == 1:
        witness.append("order 1: regular germ, only free modules")
        return FINITE, REGULAR, None
    if e == 2:
        return _verdict_order_two(cur, witness)
    if e == 3:
        return _verdict_order_three(cur, witness)
    witness.append(f"multiplicity {e} >= 4: indecomposables of every constant rank exist")
    return UNBOUNDED, None, None


def classify(f: TruncatedSeries, precision: int | None = None) -> CMTypeReport:
    """Classify k[[variables]]/(f) by Cohen-Macaulay representation type."""
    if precision is None:
        precision = default_precision(f) if f.exact else f.precision
    if precision > f.precision and not f.exact:
        precision = f.precision
    cur = f.truncate(precision) if precision != f.precision else f
    fld = f.field
    nvars = len(f.variables)
    d = nvars - 1
    witness: list = []
    split_steps = SplitResult(residual=cur, squares_split=0)

    e0 = cur.order()
    if e0 is None:
        if cur.exact:
            raise ZeroOrUnitInputError("zero germ")
        raise PrecisionInsufficientError("germ is zero below precision",
                                         suggested=2 * precision)
    if e0 == 0:
        raise ZeroOrUnitInputError("unit germ defines no singularity")

    def report(verdict, normal_form, reason=None):
        if verdict == FINITE:
            bound = _finite_bound(d, normal_form, fld.characteristic)
        elif verdict == BOUNDED_INFINITE:
            bound = 2 ** d
        else:
            bound = None
        return CMTypeReport(
            verdict=verdict, normal_form=normal_form, dimension=d,
            multiplicity=e0, generator_bound=bound, witness=witness,
            precision_used=precision, undetermined_reason=reason,
            split=split_steps if split_steps.squares_split else None)

    if d == 0:
        return report(UNDETERMINED, None,
                      "dimension-0 quotients are outside the classifier")

    while len(cur.variables) >= 3:
        if fld.characteristic == 2:
            raise CharacteristicTwoError(
                "characteristic 2 unsupported for dimension >= 2")
        e = cur.order()
        if e is None:
            # zero residuals are intercepted right after each split
            raise PrecisionInsufficientError(
                "residual germ is zero below precision", suggested=2 * precision)
        if e == 1:
            witness.append("order 1: regular germ, only free modules")
            return report(FINITE, REGULAR)
        if e >= 3:
            witness.append(
                f"order {e} >= 3 in dimension >= 2: unbounded type")
            return report(UNBOUNDED, None)
        residual, step = split_one_square(cur)
        split_steps.steps.append(step)
        split_steps.squares_split += 1
        split_steps.residual = residual
        for vi, vj in step.presubs:
            msg = f"substitute {vi} -> {vi} + {vj}"
            split_steps.change_log.append(msg)
            witness.append(msg)
        msg = (f"split {step.var}^2 off; residual germ in "
               f"({', '.join(residual.variables)})")
        split_steps.change_log.append(msg)
        witness.append(msg)
        if residual.order() is None and residual.exact:
            if len(residual.variables) == 2:
                witness.append("zero residual in two variables: the suspended "
                               "A-infinity germ")
                return report(BOUNDED_INFINITE, A_INFINITY)
            witness.append("zero residual with three or more variables left: "
                           "the singular locus is too large for bounded type")
            return report(UNBOUNDED, None)
        cur = residual

    verdict, normal_form, reason = _verdict_dimension_one(cur, witness)
    return report(verdict, normal_form, reason)
