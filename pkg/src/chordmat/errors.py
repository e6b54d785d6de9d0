"""Exception types raised across the package."""


class ChordmatError(Exception):
    """Base class for all package errors."""


class EnumerationCapExceeded(ChordmatError):
    """An exhaustive enumeration would exceed its configured cap."""


class InputError(ChordmatError, ValueError):
    """Malformed input file or argument."""


class InvalidCircuitAxioms(ChordmatError, ValueError):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class NotACircuit(ChordmatError, ValueError):
    pass


class NotSimple(ChordmatError, ValueError):
    pass


class NotAFlat(ChordmatError, ValueError):
    pass


class SeedNotCircuits(ChordmatError, ValueError):
    pass


class InvalidChain(ChordmatError, ValueError):
    pass


class InvalidPartition(ChordmatError, ValueError):
    pass


class InvalidSLabel(ChordmatError, ValueError):
    pass


class DifferentMatroids(ChordmatError, ValueError):
    pass


class NoPathFound(ChordmatError):
    """No deformation path between two M-chains; should never happen."""


class NotConnected(ChordmatError, ValueError):
    pass


class NotSimpleGraph(ChordmatError, ValueError):
    pass
