"""Exception types shared across the package."""


class KnotctError(Exception):
    """Base class for all package errors."""


class DivisionByZero(KnotctError):
    """A subtractive continued fraction hit a zero denominator.

    Carries the 1-based position of the entry whose tail evaluated to
    the offending value.
    """

    def __init__(self, position):
        self.position = position
        super().__init__(f"zero denominator while evaluating entry {position}")


class PatternMismatch(KnotctError):
    """A rewrite rule does not apply at the requested position."""


class InvalidInput(KnotctError):
    """Preconditions on an input value are violated."""


class ParseError(KnotctError):
    def __init__(self, text, pos, expected):
        self.pos = pos
        self.expected = expected
        super().__init__(f"parse error at position {pos}: expected {expected!r} in {text!r}")


class ValidationError(KnotctError):
    """A structurally well-formed spec violates a family constraint."""


class NotAKnot(KnotctError):
    """Diagram has more than one component."""


class UnclassifiableType(KnotctError):
    """Montesinos spec fits neither the odd- nor the even-type genus case."""


class NotAlternating(KnotctError):
    pass


class NotReduced(KnotctError):
    """Diagram has a nugatory crossing."""


class MissingProvenance(KnotctError):
    """Operation needs twist-box construction provenance the diagram lacks."""


class BudgetExceeded(KnotctError):
    """Crossing/recursion budget exceeded (never silently approximated)."""


class NonIntegralA2(KnotctError):
    """-V''(1)/6 failed to be an integer; signals an upstream bug."""


class NoFormula(KnotctError):
    """No published closed form for this family/variant."""


class GenusMismatch(KnotctError):
    """Conway-degree genus disagrees with the surface genus; upstream bug."""
