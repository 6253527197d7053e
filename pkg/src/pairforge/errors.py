"""Exception hierarchy shared by the library and the command-line tool."""


class PairforgeError(Exception):
    """Base class for every error raised on purpose by pairforge."""


class FieldMismatchError(PairforgeError, TypeError):
    """Operands from two different base fields were combined."""


class ParseError(PairforgeError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class AxiomError(PairforgeError, ValueError):
    """A structure tensor fails an associativity-type axiom."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class PreconditionError(PairforgeError, ValueError):
    """An operation was called outside the class of inputs it is defined for."""


class UnsupportedError(PairforgeError):
    """The input is legitimate but outside what the algorithms can decide."""


class BudgetExceeded(PairforgeError):
    def __init__(self, estimate, budget):
        self.estimate = estimate
        self.budget = budget
        super().__init__(
            f"estimated {estimate} evaluations exceeds the work budget of {budget}"
        )


class InvariantViolation(PairforgeError, AssertionError):
    """A theorem checker disagreed with a construction. Always a bug."""

    def __init__(self, message, payload=None):
        self.payload = payload
        super().__init__(message)
