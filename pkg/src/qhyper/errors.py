"""Exception hierarchy shared by the whole package."""


class GeometryError(ValueError):
    """A geometric precondition was violated (bad point, bad lift, ...)."""


class ZeroDivisorError(GeometryError, ZeroDivisionError):
    """Inversion of a quaternion whose modulus is below tolerance."""


class NonUnitError(GeometryError):
    pass


class DimensionError(GeometryError):
    pass


class PositiveVectorError(GeometryError):
    """The vector lies outside the closure of the negative cone."""


class CoincidentPointsError(GeometryError):
    pass


class NotInModuliSpaceError(GeometryError):
    pass
