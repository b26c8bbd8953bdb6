class AlgebraError(Exception):
    pass


class NotASquare(AlgebraError):
    pass


class PrecisionExhausted(AlgebraError):
    pass


class NotSolvable(AlgebraError):
    pass


class SearchExhausted(AlgebraError):
    def __init__(self, message, bound=None):
        super().__init__(message)
        self.bound = bound


class PreconditionViolation(AlgebraError, ValueError):
    pass


class IdentityViolation(AlgebraError):
    pass
