"""Exception types shared across the package."""


class NCU2Error(Exception):
    """Base class for all domain errors raised by this package."""


class DivisionByZero(NCU2Error):
    pass


class PoleAtZero(NCU2Error):
    """A scalar has a genuine pole at the requested parameter value."""


class SingularInverse(NCU2Error):
    """A numeric matrix inverse failed at every sampled representation."""


class NonInvertibleCentral(NCU2Error):
    """alpha*I + beta*A is not invertible inside the central 2-dim subalgebra."""


class NonCommutingEntries(NCU2Error):
    """Matrix entries do not pairwise commute, so the adjugate route is invalid."""


class SingularDeterminant(NCU2Error):
    pass


class CannotInvert(NCU2Error):
    """No supported inversion route applies; carries the reason as message."""


class IrregularTestFunction(NCU2Error):
    """Test function has a pole at an endpoint or a nonzero limit at infinity."""


class NonUnitVector(NCU2Error):
    pass


class RelationViolation(NCU2Error):
    """Numeric generator matrices fail the defining bracket relations."""


class ZeroDenominator(NCU2Error):
    pass


class ParseError(NCU2Error):
    """Syntax error; carries the byte offset and the expected-token set."""

    def __init__(self, message, offset, expected=()):
        super().__init__(message)
        self.offset = offset
        self.expected = tuple(expected)

    def __str__(self):
        base = super().__str__()
        if self.expected:
            return f"{base} at offset {self.offset} (expected: {', '.join(self.expected)})"
        return f"{base} at offset {self.offset}"
