"""Exception types raised across orbitkit."""


class OrbitkitError(Exception):
    """Base class."""


class ParseError(OrbitkitError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        loc = f"line {line}, column {column}: " if line else ""
        super().__init__(loc + message)


class UndeclaredSymbol(ParseError):
    pass


class DuplicateBracket(ParseError):
    pass


class AntisymmetryViolation(OrbitkitError):
    def __init__(self, j: int, k: int):
        self.indices = (j, k)
        super().__init__(f"[X{j},X{k}] is not minus [X{k},X{j}]")


class JacobiViolation(OrbitkitError):
    def __init__(self, j: int, k: int, l: int, residual=None):
        self.indices = (j, k, l)
        self.residual = residual
        super().__init__(f"Jacobi identity fails on basis triple ({j},{k},{l})")


class NotNilpotent(OrbitkitError):
    pass


class CocycleViolation(OrbitkitError):
    def __init__(self, x: int, y: int, z: int):
        self.indices = (x, y, z)
        super().__init__(f"2-cocycle identity fails on basis triple ({x},{y},{z})")


class Degenerate(OrbitkitError):
    pass


class NotDerivation(OrbitkitError):
    pass


class NotHomomorphism(OrbitkitError):
    pass


class CentersNotShared(OrbitkitError):
    pass


class NotPolarization(OrbitkitError):
    pass


class NotAnIdeal(OrbitkitError):
    pass


class SequenceMismatch(OrbitkitError):
    pass


class TriangularityFailure(OrbitkitError):
    def __init__(self, message: str, index: int | None = None):
        self.index = index
        super().__init__(message)


class BracketOracleFailure(OrbitkitError):
    pass


class ArityMismatch(OrbitkitError):
    pass


class RestrictionNotBijective(OrbitkitError):
    pass


class PreconditionFailed(OrbitkitError):
    def __init__(self, which: str, message: str = ""):
        self.which = which
        super().__init__(f"{which}: {message}" if message else which)


class GridTooCoarse(OrbitkitError):
    pass


class NoConvergence(OrbitkitError):
    pass
