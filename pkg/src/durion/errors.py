"""Exception hierarchy shared by every durion module."""


class DurionError(Exception):
    """Base class for all library errors."""


class DomainError(DurionError, ValueError):
    """A value lies outside the domain an operation is defined on."""


class UndefinedFormError(DomainError):
    """Arithmetic on infinity with no defined result (inf - inf, 0 * inf, inf / inf)."""


class KernParseError(DurionError):
    """Malformed **kern input."""

    def __init__(self, message, line=None, token=None):
        self.message = message
        self.line = line
        self.token = token
        super().__init__(str(self))

    def __str__(self):
        text = self.message
        if self.token is not None:
            text = f"{text} (token {self.token!r})"
        if self.line is not None:
            text = f"line {self.line}: {text}"
        return text


class UnsupportedFeatureError(KernParseError):
    """Valid Humdrum that lies outside the supported **kern subset."""

    def __init__(self, feature, line=None, token=None):
        self.feature = feature
        super().__init__(f"unsupported feature: {feature}", line=line, token=token)


class UnsupportedDurationError(UnsupportedFeatureError):
    """A recip numeral whose factorization needs a base symbol outside 1..128."""
