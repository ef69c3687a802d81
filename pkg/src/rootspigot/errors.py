class GuardViolation(ValueError):
    """A rule was applied to a state its guard does not admit."""


class DigitOverflow(RuntimeError):
    """More than nine subtractions in one group; the machine state is corrupt."""


class PrecisionWarning(UserWarning):
    """Float-mode extraction stopped before the requested digit count."""
