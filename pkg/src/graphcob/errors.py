"""Exception hierarchy.

Every domain error carries a short machine-readable ``code`` (the class name)
and a ``detail`` dict that the CLI serializes verbatim.
"""


class GafError(ValueError):
    """Base class for all domain errors raised by graphcob."""

    def __init__(self, message="", **detail):
        super().__init__(message or self.__class__.__name__)
        self.detail = detail

    @property
    def code(self):
        return self.__class__.__name__

    def to_json(self):
        return {"error": self.code, "detail": {"message": str(self), **self.detail}}


# gaf-core
class InvolutionNotSelfInverse(GafError):
    pass


class InvolutionHasFixedPoint(GafError):
    pass


class IndexOutOfRange(GafError):
    pass


class NotClosed(GafError):
    pass


# morphisms
class NotEquivariant(GafError):
    pass


class PreimageNotTree(GafError):
    pass


class PreimageWrongBasing(GafError):
    pass


class HalfEdgeNotSingleton(GafError):
    pass


class RestrictionViolated(GafError):
    pass


class SourceTargetMismatch(GafError):
    pass


class NotAForest(GafError):
    pass


class TwoAttachingVerticesInTree(GafError):
    pass


# monoidal / cospan
class BoundaryMismatch(GafError):
    pass


# grading
class NoDistinguishedColor(GafError):
    pass


class PreconditionViolated(GafError):
    pass


# catalog
class BudgetExceeded(GafError):
    pass


# input handling
class MalformedJson(GafError):
    pass


class UnknownSubcommand(GafError):
    pass
