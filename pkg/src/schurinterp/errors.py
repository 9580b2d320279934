"""Exception hierarchy shared by all schurinterp modules."""


class SchurInterpError(Exception):
    """Base class for all errors raised by this package."""


# --- polynomial / rational-function layer ---

class ZeroPolynomial(SchurInterpError):
    pass


class NoConvergence(SchurInterpError):
    pass


class ZeroDenominator(SchurInterpError):
    pass


class PoleAtCenter(SchurInterpError):
    pass


class PoleAtPoint(SchurInterpError):
    pass


# --- structured linear algebra ---

class NodeOutsideDisk(SchurInterpError):
    pass


class DuplicateNode(SchurInterpError):
    pass


class ValueCountMismatch(SchurInterpError):
    pass


class SingularSystem(SchurInterpError):
    pass


class NotHermitian(SchurInterpError):
    pass


# --- disk function theory ---

class ZeroOutsideDisk(SchurInterpError):
    pass


class NonUnimodularFactor(SchurInterpError):
    pass


class PoleOnBoundary(SchurInterpError):
    pass


class NotContractive(SchurInterpError):
    """Boundary sup of the function exceeds 1; not in any generalized Schur class."""


class ZeroOnBoundary(SchurInterpError):
    pass


class ZeroFunction(SchurInterpError):
    pass


class QuadratureInconclusive(SchurInterpError):
    pass


class SingularOnContour(SchurInterpError):
    pass


class PoleOnGrid(SchurInterpError):
    pass


class DegenerateGrid(SchurInterpError):
    pass


# --- interpolation core ---

class SingularPick(SchurInterpError):
    """The Pick matrix is numerically singular; coefficient-matrix construction refused."""


class PoleAtNode(SchurInterpError):
    pass


class ContourThroughPole(SchurInterpError):
    pass


class NodesNotEnclosed(SchurInterpError):
    pass


class SelfCheckFailed(SchurInterpError):
    """An internal structural identity failed; signals a construction bug."""


class DegenerateDenominator(SchurInterpError):
    pass


class IdenticallyZeroDenominator(SchurInterpError):
    pass


class ValidationMismatch(SchurInterpError):
    """A classification prediction contradicts the realized function."""


class NotInHInfinity(SchurInterpError):
    pass
