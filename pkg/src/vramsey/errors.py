class VRamseyError(Exception):
    pass


class InvalidArguments(VRamseyError, ValueError):
    pass


class MalformedInput(VRamseyError, ValueError):
    """Unparseable set literal, pattern literal or JSON document."""


class UnknownPattern(MalformedInput):
    pass


class NotFoundWithinBound(VRamseyError, LookupError):
    """A bounded search (dim2, Ramsey number) ran out of ground sizes."""


class SearchInconclusive(VRamseyError):
    """The node budget ran out before a search could decide."""

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate
