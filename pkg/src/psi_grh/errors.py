"""Exception hierarchy shared by all modules."""


class PsiGRHError(Exception):
    """Base class for every error raised by this package."""


class DomainError(PsiGRHError, ValueError):
    """An argument lies outside the region where a formula is valid."""


class NotFundamental(PsiGRHError, ValueError):
    def __init__(self, D: int):
        super().__init__(f"{D} is not a fundamental discriminant")
        self.D = D


class SingularSystem(PsiGRHError, ArithmeticError):
    """The certificate linear system is rank deficient at working precision."""


class SignPatternViolation(PsiGRHError):
    """The Dirichlet polynomial S(n) does not have the required sign pattern."""

    def __init__(self, message: str, n: int | None = None, pair: int | None = None):
        super().__init__(message)
        self.n = n
        self.pair = pair


class IndexDivisorUnknown(PsiGRHError):
    def __init__(self, p: int):
        super().__init__(
            f"p={p} divides the index of the polynomial order; "
            "supply its splitting with an 'index-prime' line"
        )
        self.p = p


class CutoffTooLarge(PsiGRHError, ValueError):
    pass


class FieldFormatError(PsiGRHError, ValueError):
    """Malformed field-definition or certificate file."""
