"""Exception types shared across the package."""


class SwscError(Exception):
    """Base class for errors raised by this package."""


class ParameterError(SwscError, ValueError):
    """Rejected coder parameters or out-of-range input symbols."""


class CorruptStreamError(SwscError, ValueError):
    """Encoded input that a conforming encoder cannot have produced."""


class InternalInconsistencyError(SwscError, RuntimeError):
    """A state invariant was violated; indicates a bug, never valid-input behaviour."""
