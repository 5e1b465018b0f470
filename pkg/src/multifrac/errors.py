"""Exception types shared across the package."""


class PresentationError(ValueError):
    """Malformed or inconsistent Artin-Tits presentation data."""


class BudgetExhausted(RuntimeError):
    """A bounded computation ran out of budget before settling.

    This is an *undetermined* outcome, deliberately distinct from a negative
    answer: rewriting over a general Artin-Tits presentation is not known to
    terminate, so every potentially unbounded loop carries a budget and must
    surface exhaustion instead of guessing.
    """

    def __init__(self, message: str, **stats):
        super().__init__(message)
        self.stats = stats


class StructuralError(RuntimeError):
    """An internal invariant that the ambient theory guarantees was violated.

    Raised, for example, if two distinct maximal common divisors show up
    (impossible in a gcd-monoid) or a fraction entry that must have a unique
    representative word does not.  Seeing this means a bug, not bad input.
    """
