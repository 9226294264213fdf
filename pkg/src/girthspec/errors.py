"""Exception hierarchy shared across the package."""


class GirthspecError(Exception):
    """Base class for all package-specific failures."""


class ParseError(GirthspecError):
    """Malformed or inconsistent graph input."""


class RouteInapplicableError(GirthspecError):
    """A counting route was asked to run outside its preconditions."""


class SizeCapError(RouteInapplicableError):
    """Input exceeds a configured dense/enumeration size cap."""


class NumericalError(GirthspecError):
    """A tolerance or bookkeeping check failed; results would be untrustworthy."""


class GenerationError(GirthspecError):
    """Random graph generation could not satisfy the requested constraints."""
