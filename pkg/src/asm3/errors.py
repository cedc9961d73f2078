"""Exception types shared across the package."""

# Division by an exact zero uses the builtin everywhere; the alias keeps the
# contract surface importable from one place.
DivisionByZero = ZeroDivisionError


class NonExactDivision(ArithmeticError):
    """Polynomial division left a nonzero remainder."""


class EvalAtZero(ZeroDivisionError):
    """A Laurent polynomial was evaluated at x = 0."""


class DegenerateParameters(ValueError):
    """A terminating series hit a vanishing lower Pochhammer factor."""


class OutOfRange(ValueError):
    """An index argument lies outside its documented range."""


class PoleAtSample(ZeroDivisionError):
    """A substitution sample landed on a pole of the variable change."""


class SizeLimitExceeded(ValueError):
    """Requested size is beyond the configured brute-force cap."""
