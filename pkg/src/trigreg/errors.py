"""Exception hierarchy shared by all modules."""


class TrigRegError(Exception):
    """Base class for library errors."""


class DomainError(TrigRegError, ValueError):
    """Input outside the admissible domain (x outside [-X/2, X/2], eps outside (0, 1), ...)."""


class MembershipError(TrigRegError, ValueError):
    """Function has coefficients outside the hypothesis space."""


class RangeError(TrigRegError, ValueError):
    """Negative operator power applied to a function with a nonzero tail."""


class SizeError(TrigRegError, ValueError):
    """Problem too large for the requested route."""


class DegenerateError(TrigRegError, ValueError):
    """Degenerate input for which the quantity is undefined."""


class RankError(TrigRegError, ValueError):
    """Rank-deficient design where full rank is required."""


class ValidityError(TrigRegError, ValueError):
    """Bound evaluated outside its hypothesis (e.g. gamma below its threshold)."""


class NumericError(TrigRegError, ArithmeticError):
    """Non-finite intermediate result."""


class SchemaError(TrigRegError, ValueError):
    """Config or serialized record violates its schema."""
