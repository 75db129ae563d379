"""Exception types shared across the package."""


class GridBenchError(Exception):
    """Base class for package-specific failures."""


class GenerationError(GridBenchError):
    """A generator exhausted its retry budget or could not honor its parameters."""


class VerificationError(GridBenchError):
    """A generated example does not match its task's reference verifier."""


class VerifierDomainError(GridBenchError):
    """A verifier was handed a grid outside the input space its task defines."""


class FormatError(GridBenchError, ValueError):
    """A task file does not conform to the on-disk JSON schema."""
