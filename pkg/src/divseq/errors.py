"""Exception hierarchy shared by every module.

UsageError covers malformed requests (bad parameters, unparseable text,
empty inputs); DomainError covers values the algebra rejects (zero
elements, mixed rings); InexactDivision reports a failed exact division
together with the witnesses; InternalError marks invariant violations
that should never happen on a correct build.
"""


class DivseqError(Exception):
    """Base class for all errors raised by this package."""


class UsageError(DivseqError):
    """The request itself is malformed (arguments, text input, counts)."""


class DomainError(DivseqError):
    """An element is outside the operation's domain (zero, wrong ring)."""


class InexactDivision(DivseqError):
    """b does not divide a; carries dividend, divisor, partial quotient
    and the nonzero remainder, so a == divisor * quotient + remainder."""

    def __init__(self, dividend, divisor, quotient, remainder):
        self.dividend = dividend
        self.divisor = divisor
        self.quotient = quotient
        self.remainder = remainder
        super().__init__(
            f"{divisor} does not divide {dividend} exactly "
            f"(remainder {remainder})"
        )


class InternalError(DivseqError):
    """A proven invariant failed at runtime; indicates a bug, not bad input."""
