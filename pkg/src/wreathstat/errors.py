"""Exception types raised by wreathstat."""


class ParameterError(ValueError):
    """Arguments violate a precondition (mismatched groups, s not dividing r, ...)."""


class DomainError(ValueError):
    """An operation is undefined on its input, e.g. exp of a series with constant term."""


class IntegralityError(ArithmeticError):
    """A quantity that counts group elements came out non-integral.

    This never happens for correct formulas; seeing it means a formula bug.
    """


class ConsistencyError(AssertionError):
    """Two independent evaluations of the same quantity disagree."""


class EnumerationTooLarge(ParameterError):
    """Brute-force enumeration would exceed the configured element cap."""

    def __init__(self, size, cap):
        self.size = size
        self.cap = cap
        super().__init__(
            f"enumeration of {size} elements exceeds cap {cap}; "
            f"rerun with a cap of at least {size}"
        )
