"""Exception hierarchy shared by all modules."""


class LieGeometryError(Exception):
    """Base class for every error raised by liecycles."""


class InvalidInput(LieGeometryError):
    pass


class DegenerateSubspace(LieGeometryError):
    """The Lie form restricted to the requested subspace is singular."""


class DependentSpanningSet(LieGeometryError):
    pass


class DegenerateTriple(InvalidInput):
    """The cycle lies in the subspace spanned by the family."""


class NotOnQuadric(LieGeometryError):
    """A vector that should be a proper cycle has nonzero self-product."""


class OutsideChart(LieGeometryError):
    pass


class InvalidMirror(LieGeometryError):
    pass


class NumericalFailure(LieGeometryError):
    def __init__(self, message, residuals=None):
        super().__init__(message)
        self.residuals = residuals


# euclidean oracle failures

class NoIntersection(LieGeometryError):
    pass


class NoCommonTangent(LieGeometryError):
    pass


class Ambiguous(LieGeometryError):
    pass


class NoDistance(LieGeometryError):
    pass


# scene / front end

class ParseError(LieGeometryError):
    def __init__(self, message, path="$"):
        super().__init__(f"{path}: {message}")
        self.path = path


class Unsupported(LieGeometryError):
    pass
