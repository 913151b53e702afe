"""Exception hierarchy shared by every cmtype module.

Errors fall into three groups: input contract violations (parse errors,
mixed contexts, bad substitutions), mathematical preconditions (not a
unit, not regular, characteristic restrictions), and precision failures.
Precision failures carry a suggested retry precision so callers can
re-run instead of guessing.
"""

from __future__ import annotations


class CmTypeError(Exception):
    """Base class for all library errors."""


class ParseError(CmTypeError):
    """Input text violates the polynomial grammar."""


class UnknownVariableError(ParseError):
    """Expression uses a variable not in the declared variable list."""


class DivisionInTextError(ParseError):
    """'/' used outside a rational literal; series division is not parseable."""


class MixedContextError(CmTypeError):
    """Operands disagree on variable list or coefficient field."""


class NotAUnitError(CmTypeError):
    """Inversion requested for a series with zero constant term."""


class NonLocalSubstitutionError(CmTypeError):
    """Substitution image has a nonzero constant term."""


class NotRegularError(CmTypeError):
    """Series is not regular of minimal order in the distinguished variable."""


class PrecisionInsufficientError(CmTypeError):
    """The requested computation cannot be certified below the working precision."""

    def __init__(self, message: str, suggested: int | None = None):
        if suggested is not None:
            message = f"{message} (retry with precision >= {suggested})"
        super().__init__(message)
        self.suggested = suggested


class CharacteristicTwoError(CmTypeError):
    """Splitting quadrics requires coefficient characteristic != 2."""


class SmallCharacteristicError(CmTypeError):
    """Tangent-cone analysis requires characteristic 0 or p > 3."""


class UnsupportedCharacteristicError(CmTypeError):
    """Reducedness analysis not available in this characteristic."""


class NotOrderTwoError(CmTypeError):
    """split_quadratic requires a germ of order exactly 2."""


class ZeroOrUnitInputError(CmTypeError):
    """The classifier needs a nonzero non-unit germ."""


class VariableCollisionError(CmTypeError):
    """The fresh cover variable already occurs in the factorization."""


class ShapeMismatchError(CmTypeError):
    """Equation does not have the f + z^2 shape expected by reduce_mod_z."""


class InconsistentTableError(CmTypeError):
    """Multiplication table of a finite extension fails a consistency check."""


class HypothesesNotMetError(CmTypeError):
    """Artinian pair does not satisfy the big-indecomposables hypotheses."""


class MismatchedSquareError(CmTypeError):
    """Pair module and conductor square belong to different pairs."""


class DimensionTooLargeError(CmTypeError):
    """Endomorphism algebra exceeds the configured analysis cap."""


class UndecidedError(CmTypeError):
    """The indecomposability certifier could not reach a verdict."""
