"""Exception types raised across the package."""


class LogCodesError(Exception):
    """Base class for all package errors."""


class NotPrimePower(LogCodesError, ValueError):
    pass


class TooLarge(LogCodesError, ValueError):
    pass


class DivisionByZero(LogCodesError, ZeroDivisionError):
    pass


class RankDeficient(LogCodesError, ValueError):
    def __init__(self, actual_rank: int, message: str | None = None):
        self.actual_rank = actual_rank
        super().__init__(message or f"generator rows are dependent (rank {actual_rank})")


class BudgetExceeded(LogCodesError, RuntimeError):
    def __init__(self, required: int, budget: int, what: str = "codewords"):
        self.required = required
        self.budget = budget
        super().__init__(f"{required} {what} required, budget is {budget}")


class BadParams(LogCodesError, ValueError):
    pass


class InexactDivision(LogCodesError, ArithmeticError):
    """A division that must be exact left a remainder."""


class InexactTransform(InexactDivision):
    """MacWilliams coefficient not divisible by the code size."""


class ZeroDenominator(LogCodesError, ZeroDivisionError):
    pass
