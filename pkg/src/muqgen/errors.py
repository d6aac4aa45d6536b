"""Exception hierarchy shared by all modules."""


class MuqError(Exception):
    """Base class for every error raised by muqgen."""


# map structure
class MapError(MuqError):
    pass


class MalformedPairing(MapError):
    pass


class NotConnected(MapError):
    pass


class NotGenusZero(MapError):
    pass


class UnknownVertex(MapError, KeyError):
    pass


class NotAQuadrangulation(MapError):
    pass


class DisconnectedResult(MapError):
    pass


class CornersNotOnSameFace(MapError):
    pass


# enumeration
class OrderTooLargeForOracle(MuqError, ValueError):
    pass


class UnknownPredicate(MuqError, ValueError):
    pass


# halves
class HalfError(MuqError):
    pass


class InvalidHalf(HalfError):
    pass


class MultipleMarkedEdges(InvalidHalf):
    pass


class LowDegreeInterior(InvalidHalf):
    pass


class NotParallel(HalfError):
    pass


class ResultNotHalf(HalfError):
    pass


class BridgeMarkedEdge(HalfError):
    pass


# verification
class VerificationError(MuqError):
    """A checked claim failed; ``witnesses`` holds hex canonical codes."""

    def __init__(self, message, witnesses=()):
        super().__init__(message)
        self.witnesses = list(witnesses)


class CounterexampleFound(VerificationError):
    pass


class CountMismatch(VerificationError):
    pass


class FixtureMismatch(VerificationError):
    pass


class ConstructionFailed(VerificationError):
    pass


# interchange formats
class FormatError(MuqError, ValueError):
    pass


class BadHeader(FormatError):
    pass


class TruncatedRecord(FormatError):
    pass


class AmbiguousMultiedgePairing(FormatError):
    pass


class NonPlanarPairing(FormatError):
    pass


class RotsysSyntaxError(FormatError):
    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class InconsistentIncidence(FormatError):
    pass

__all__ = [
    "MuqError",
    "MapError",
    "MalformedPairing",
    "NotConnected",
    "NotGenusZero",
    "UnknownVertex",
    "NotAQuadrangulation",
    "DisconnectedResult",
    "CornersNotOnSameFace",
    "OrderTooLargeForOracle",
    "UnknownPredicate",
    "HalfError",
    "InvalidHalf",
    "MultipleMarkedEdges",
    "LowDegreeInterior",
    "NotParallel",
    "ResultNotHalf",
    "BridgeMarkedEdge",
    "VerificationError",
    "CounterexampleFound",
    "CountMismatch",
    "FixtureMismatch",
    "ConstructionFailed",
    "FormatError",
    "BadHeader",
    "TruncatedRecord",
    "AmbiguousMultiedgePairing",
    "NonPlanarPairing",
    "RotsysSyntaxError",
    "InconsistentIncidence",
]
