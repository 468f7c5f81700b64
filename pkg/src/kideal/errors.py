"""Exception hierarchy shared by every module."""


class KIdealError(Exception):
    pass


class StructureError(KIdealError, ValueError):
    """Malformed input: bad table shape, out-of-range index, parent mismatch."""


class InvalidParameter(KIdealError, ValueError):
    pass


class PreconditionError(KIdealError, ValueError):
    """An operation was called on input outside its domain (e.g. a non k-ideal)."""


class InvalidSemiring(KIdealError, ValueError):
    def __init__(self, report):
        self.report = report
        first = report.violations[0] if report.violations else None
        super().__init__(f"semiring axioms violated: {first}")


class ParseError(KIdealError):
    def __init__(self, message, line=None):
        self.line = line
        self.message = message
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)


class ConsistencyError(KIdealError, AssertionError):
    """Two independent computations of the same quantity disagreed."""
