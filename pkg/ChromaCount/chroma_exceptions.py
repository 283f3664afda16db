

class ChromaError(Exception):
    pass


class FamilySpecError(ChromaError):
    """Syntax or arity error in a family spec; ``offset`` is the byte position."""

    def __init__(self, message, offset=None):
        self.offset = offset
        if offset is not None:
            message = '%s (at byte %i)' % (message, offset)
        super().__init__(message)


class Graph6Error(ChromaError):
    pass


class GraphSizeError(ChromaError):
    pass


class StructureError(ChromaError):
    pass


class UnsupportedFamilyError(ChromaError):
    pass


class UniverseError(ChromaError):
    pass


class FoldSizeError(ChromaError):
    pass


class HypothesisError(ChromaError):
    pass


class DivisibilityError(ChromaError):
    pass


class CountOverflowError(ChromaError):
    pass


class BudgetExhausted(ChromaError):
    """Raised when an exact answer was demanded but the budget ran out.

    ``report`` holds the partial SearchReport (interval, best witness so far).
    """

    def __init__(self, message, report=None):
        self.report = report
        super().__init__(message)
