"""Exception hierarchy shared by every layer of the package."""


class BinomialError(ValueError):
    """Base class for all data errors raised by binomial_mc."""


class ParameterError(BinomialError):
    pass


class InvalidCodeError(BinomialError):
    pass


class CodeRangeError(BinomialError):
    pass


class MalformedRecordError(BinomialError):
    pass


class CorruptChannelError(BinomialError):
    pass


class ConstraintError(BinomialError):
    pass


class ContainerError(BinomialError):
    pass


class BadMagicError(ContainerError):
    pass


class BadVersionError(ContainerError):
    pass


class TruncatedRecordError(ContainerError):
    pass


class NonzeroPaddingError(ContainerError):
    pass


class MissingChannelError(ContainerError):
    pass
