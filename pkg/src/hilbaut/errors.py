class HilbAutError(Exception):
    """Base class for errors raised by hilbaut."""


class InputError(HilbAutError):
    """An input document or preset name could not be parsed."""

    def __init__(self, message: str, field: str | None = None):
        super().__init__(f"{field}: {message}" if field else message)
        self.field = field


class SpecValidationError(HilbAutError):
    """An automorphism specification violates its invariants."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class BoundExceeded(HilbAutError):
    """A computation was requested beyond its configured size bound."""


class NonIntegralError(HilbAutError):
    """A Lefschetz number came out non-integral, which means the spectrum
    data is inconsistent."""


class ConventionError(HilbAutError):
    """A closed form disagreed with the series it is supposed to match."""
