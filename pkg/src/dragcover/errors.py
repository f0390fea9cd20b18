"""Exception types raised by cover construction, objects, the mover, and file IO."""


class DragCoverError(Exception):
    """Base class for every error this library raises on purpose."""


class NonConvexError(DragCoverError):
    """Polygon node apexes contain a reflex corner."""


class DegenerateError(DragCoverError):
    """Polygon node has (nearly) zero area after collinear-point removal."""


class BadDimensionsError(DragCoverError):
    """Rectangle or frame parameters leave no room for the requested nodes."""


class TooFewPointsError(DragCoverError):
    """A point loop needs at least two points."""


class BadRadiiError(DragCoverError):
    """Radii are inconsistent (non-positive, or inner/outer out of order)."""


class BadCountError(DragCoverError):
    """A regular polygon needs at least three apexes."""


class BadNodeIndexError(DragCoverError):
    """Node index is outside the object's current cover layout."""


class NotResizableError(DragCoverError):
    """A resize node was addressed on an object declared non-resizable."""


class NotMoveableError(DragCoverError):
    """A whole-move frame node was addressed on a non-moveable control."""


class DuplicateObjectError(DragCoverError):
    """Object is already registered with this mover."""


class BadIndexError(DragCoverError):
    """Registration or restack index is out of range."""


class DragInProgressError(DragCoverError):
    """Operation is not allowed while a drag is active."""


class BadTargetError(DragCoverError):
    """Target object does not belong to the addressed assembly."""


class UnknownKindError(DragCoverError):
    """Requested object kind is not one of the implemented set."""


class MalformedSceneError(DragCoverError):
    """Scene file failed to parse or names an unknown object kind."""


class MalformedTraceError(DragCoverError):
    """Trace file failed to parse or violates event ordering."""

    def __init__(self, message, seq=None):
        super().__init__(message if seq is None else f"event {seq}: {message}")
        self.seq = seq
