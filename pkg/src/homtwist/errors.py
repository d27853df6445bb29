"""Exception types raised across the package.

Every domain error derives from HomTwistError so callers (and the manifest
runner) can tell expected algebraic failures apart from bugs.
"""


class HomTwistError(Exception):
    """Base class for all domain errors."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class MalformedRational(HomTwistError):
    pass


class ZeroDenominator(HomTwistError):
    pass


class DimensionMismatch(HomTwistError):
    pass


class NotInvertible(HomTwistError):
    pass


class NotMultiplicative(HomTwistError):
    pass


class NotComultiplicative(HomTwistError):
    pass


class NotInvolutive(HomTwistError):
    pass


class NotCommutingWithAlpha(HomTwistError):
    pass


class BraidViolation(HomTwistError):
    pass


class CommutationFailure(HomTwistError):
    pass


class IntertwiningFailure(HomTwistError):
    pass


class YDViolation(HomTwistError):
    pass


class DegenerateQ(HomTwistError):
    pass


class ParamConstraintViolation(HomTwistError):
    pass


class PreconditionFailure(HomTwistError):
    """A documented precondition of an operation does not hold.

    `cause` names the violated precondition; `report` optionally carries the
    CheckReport that witnessed the violation.
    """

    def __init__(self, cause, report=None, witness=None):
        super().__init__(f"precondition failed: {cause}", witness=witness)
        self.cause = cause
        self.report = report


class ManifestError(HomTwistError):
    pass


class ManifestSyntaxError(ManifestError):
    def __init__(self, message, line, col):
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


class UnknownName(ManifestError):
    pass


class DuplicateName(ManifestError):
    pass


class WrongKind(ManifestError):
    pass
