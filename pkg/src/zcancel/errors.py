class ZCancelError(Exception):
    """Base class for library errors."""


class NonTorsionError(ZCancelError):
    """Element arithmetic was requested in a ring with non-root-of-unity parameters."""


class UnsupportedError(ZCancelError):
    """The computation is outside what the library can decide (e.g. non-rectangular center)."""


class ValidationError(ZCancelError, ValueError):
    """A presentation or input violates a structural invariant."""


class DegenerateDiscriminantError(ZCancelError):
    """The trace pairing determinant vanished."""
