"""Exception hierarchy.

Everything raised on purpose derives from :class:`SimplexCubeError`.  The CLI
maps :class:`ComputationLimit` subclasses to exit code 3 and every other
error to exit code 2.
"""


class SimplexCubeError(ValueError):
    pass


class ComputationLimit(SimplexCubeError):
    pass


class DimensionTooLarge(ComputationLimit):
    pass


class SingularMatrix(SimplexCubeError):
    pass


class NonSquareMatrix(SimplexCubeError):
    pass


class DegenerateSimplex(SimplexCubeError):
    pass


class DimensionMismatch(SimplexCubeError):
    pass


class UnsupportedOrder(SimplexCubeError):
    pass


class NonBinaryEntry(SimplexCubeError):
    pass


class DomainError(SimplexCubeError):
    pass


class ZeroNormal(SimplexCubeError):
    pass


class NotInsideCube(SimplexCubeError):
    pass


class PieceBoundary(SimplexCubeError):
    def __init__(self, message, left=None, right=None):
        super().__init__(message)
        self.left = left
        self.right = right


class UnknownName(SimplexCubeError):
    pass
