"""Exception types shared across the package."""


class PragrankError(Exception):
    """Base class for all package-specific errors."""


class FormatError(PragrankError, ValueError):
    """A resource file violates its expected format.

    Carries enough context (source name, line number) to locate the
    offending input without re-parsing.
    """

    def __init__(self, message, source=None, line=None):
        self.source = source
        self.line = line
        prefix = ""
        if source is not None:
            prefix += f"{source}:"
        if line is not None:
            prefix += f"{line}:"
        if prefix:
            message = f"{prefix} {message}"
        super().__init__(message)


class ResourceError(PragrankError, ValueError):
    """A required resource is absent, inconsistent, or unusable."""


class ValidationError(PragrankError, ValueError):
    """Run-level validation failed; carries a machine-readable error list."""

    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))
