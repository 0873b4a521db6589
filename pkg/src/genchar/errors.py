"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the mathematical domain of the operation."""


class DegenerateCase(ValueError):
    """The requested point is a known removable/indeterminate case.

    Raised instead of silently evaluating a 0/0 form; the message names the
    alternative route (if any) that yields the true value.
    """


class NotAPerfectSquare(ArithmeticError):
    """A SqrtRational could not be collapsed to an exact rational."""


class IrrationalTerm(ArithmeticError):
    """A sum-rule term failed to collapse to a rational.

    This never fires for valid inputs: paired coupling coefficients with a
    common (j, k) always multiply to a rational. Seeing it means a bug.
    """
