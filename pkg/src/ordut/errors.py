"""Shared exception types."""


class OrdutError(Exception):
    pass


class InputFormatError(OrdutError, ValueError):
    """Malformed generator file or element text."""


class LimitExceeded(OrdutError, RuntimeError):
    """Enumeration passed its element budget; carries the partial count."""

    def __init__(self, partial_count: int, limit: int, message: str = ""):
        super().__init__(
            message or f"enumeration exceeded the limit of {limit} elements "
                       f"({partial_count} found so far)")
        self.partial_count = partial_count
        self.limit = limit


class TransferLawViolation(OrdutError, RuntimeError):
    """An asserted normalizer-transfer law failed; carries the full report."""

    def __init__(self, law: str, witness, report=None):
        super().__init__(f"transfer law violated: {law} (witness: {witness!r})")
        self.law = law
        self.witness = witness
        self.report = report


class TheoremMismatch(OrdutError, RuntimeError):
    """The transversal/factorizability equivalence failed on concrete data."""

    def __init__(self, message: str, detail=None):
        super().__init__(message)
        self.detail = detail
