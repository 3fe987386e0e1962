"""Exception types shared across the package."""


class MMIBSError(Exception):
    """Base class for all errors raised by mmibs."""


class DimensionMismatch(MMIBSError, ValueError):
    pass


class InvalidArgument(MMIBSError, ValueError):
    pass


class UnsupportedInput(MMIBSError):
    """The input lies outside the family the exact pipeline can handle."""


class CertificateError(MMIBSError, ValueError):
    """A change-of-generators certificate h = sum z_j f_j does not hold."""


class VerificationError(MMIBSError):
    """An internal self-check (functional equation, cross-check) failed."""
