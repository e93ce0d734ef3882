"""Error types shared across the library, the CLI, and the HTTP API.

Every error carries a machine-readable ``kind`` and an HTTP status so the
API layer can map failures without per-endpoint translation tables.
"""


class IrPriorityError(Exception):
    """Base class for all domain errors."""

    kind = "Error"
    status = 422

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class UnknownLevel(IrPriorityError):
    kind = "UnknownLevel"


class OutOfRange(IrPriorityError):
    kind = "OutOfRange"


class UnknownRegime(IrPriorityError):
    kind = "UnknownRegime"


class UnknownModel(IrPriorityError):
    kind = "UnknownModel"


class UnknownArea(IrPriorityError):
    kind = "UnknownArea"


class MissingArea(IrPriorityError):
    kind = "MissingArea"


class DuplicateArea(IrPriorityError):
    kind = "DuplicateArea"


class InvalidTimestamp(IrPriorityError):
    kind = "InvalidTimestamp"


class CapabilityOutOfRange(IrPriorityError):
    kind = "CapabilityOutOfRange"


class ScoreOutOfRange(IrPriorityError):
    kind = "ScoreOutOfRange"


class EmptyCatalog(IrPriorityError):
    kind = "EmptyCatalog"


class UnknownIncident(IrPriorityError):
    kind = "UnknownIncident"


class DuplicateOrgUnit(IrPriorityError):
    kind = "DuplicateOrgUnit"


class InvalidReviewTransition(IrPriorityError):
    kind = "InvalidReviewTransition"


class ValidationFailure(IrPriorityError):
    kind = "ValidationFailure"


class NotFound(IrPriorityError):
    kind = "NotFound"
    status = 404


class IoFailure(IrPriorityError):
    kind = "IoFailure"
    status = 500
