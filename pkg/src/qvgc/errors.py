"""Exception types shared across the package."""


class QvgcError(Exception):
    """Base class for package-specific errors."""


class CapacityError(QvgcError):
    """Requested state size exceeds the simulator's qubit cap."""


class DegenerateInputError(QvgcError, ValueError):
    """Input is degenerate for the requested operation (e.g. a zero vector)."""


class UnboundParameterError(QvgcError, RuntimeError):
    """A circuit with free parameter slots was used where a concrete one is required."""


class UnsupportedConfigError(QvgcError, ValueError):
    """A configuration combination is outside what the toolkit supports."""


class NumericalAbortError(QvgcError, RuntimeError):
    """An optimizer or training loop hit a non-finite value and stopped."""
