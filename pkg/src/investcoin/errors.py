class InvestcoinError(Exception):
    """Base class for protocol and parameter errors."""


class ParameterConflict(InvestcoinError):
    pass


class SearchExhausted(InvestcoinError):
    pass


class MalformedAggregate(InvestcoinError):
    """The PSA product is not congruent to 1 mod p, so no plaintext sum exists."""


class SumOutOfBound(InvestcoinError):
    pass


class WitnessMismatch(InvestcoinError):
    pass


class OutOfRange(InvestcoinError):
    pass


class AmountOutOfRange(InvestcoinError):
    pass


class ConsistencyAbort(InvestcoinError):
    """Encrypted and committed amounts of one investor do not agree."""

    def __init__(self, investor: int, reason: str = "") -> None:
        super().__init__(f"investor {investor}: {reason}" if reason else f"investor {investor}")
        self.investor = investor
        self.reason = reason


class MissingCipher(InvestcoinError):
    pass


class ZeroSlotViolation(InvestcoinError):
    pass


class ReturnFactorOutOfRange(InvestcoinError):
    pass


class TransferMismatch(InvestcoinError):
    pass


class RangeRecheckFailed(InvestcoinError):
    pass


class EmptyNetwork(InvestcoinError):
    pass


class ParseError(InvestcoinError):
    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line
