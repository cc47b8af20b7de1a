"""Exception hierarchy shared by the kernel modules."""


class SurrealError(ArithmeticError):
    pass


class BudgetExceeded(SurrealError):
    """A result would need more length (or nesting) than the budget allows."""


class NotRepresentable(BudgetExceeded):
    """The result has infinitely many sign runs."""


class EmptyCut(SurrealError):
    pass


class NotAChain(SurrealError):
    pass


class Undecidable(SurrealError):
    pass


class NotDyadic(SurrealError):
    pass


class NotOrdinal(SurrealError):
    pass


class NotFiniteLength(SurrealError):
    pass


class NotPositive(SurrealError):
    pass


class MissingBracket(SurrealError):
    pass


class Unsupported(SurrealError):
    pass


class NotMember(SurrealError):
    """Raised by inverse maps when the argument is outside the image."""


class Unknown(SurrealError):
    """The answer depends on data outside the representable family."""


class NotSharp(SurrealError):
    pass


class DomainMismatch(SurrealError):
    pass
