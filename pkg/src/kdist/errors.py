"""Exception hierarchy shared by all kdist modules."""


class KdistError(Exception):
    """Base class for all library errors."""


class InputError(KdistError, ValueError):
    """Malformed or inconsistent input (dimension mismatch, bad JSON, ...)."""


class GeometryError(KdistError, ValueError):
    """Degenerate or invalid geometric data (unbounded gauge, bad polygon)."""


class CertificateError(KdistError, RuntimeError):
    """A certificate could not be established (cone conditions fail, cycles)."""


class FalsificationError(KdistError, RuntimeError):
    """A verified computation contradicts a proved bound.

    Raising this is an alarm: either the implementation is wrong or the
    claimed bound is. It is never swallowed.
    """
