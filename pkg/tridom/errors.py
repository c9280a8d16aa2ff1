"""Exception hierarchy shared by the library and the command line."""

from typing import Any


class TridomError(Exception):
    """Raised when a tridom operation cannot produce its result."""

    exit_code: int = 1

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_json(self) -> dict[str, Any]:
        return {
            "error": type(self).__name__,
            "message": self.message,
            "details": {key: _jsonable(value) for key, value in self.details.items()},
        }


def _jsonable(value: Any) -> Any:
    if isinstance(value, (list, tuple, set, frozenset)):
        return [_jsonable(item) for item in value]
    if isinstance(value, dict):
        return {str(key): _jsonable(item) for key, item in value.items()}
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return str(value)


class FormatError(TridomError):
    exit_code = 3


class EmbeddingError(FormatError):
    """The raw data does not describe a near-triangulation.

    ``violations`` lists every broken invariant, not only the first one found.
    """

    def __init__(self, violations, message: str | None = None):
        self.violations = tuple(violations)
        names = ", ".join(str(v) for v in self.violations)
        super().__init__(message or f"invalid near-triangulation: {names}", violations=[str(v) for v in self.violations])


class ResultNotNearTriangulation(EmbeddingError):
    pass


class NotContractible(EmbeddingError):
    pass


class ConfigError(TridomError):
    pass


class EdgeNotPresent(TridomError):
    pass


class NotReducibleEdge(TridomError):
    pass


class NotIrreducible(TridomError):
    pass


class BadOrder(TridomError):
    pass


class NotMop(TridomError):
    pass


class NotBoundaryEdge(TridomError):
    pass


class TooSmall(TridomError):
    pass


class TooLarge(TridomError):
    pass


class NotDegreeTwo(TridomError):
    pass


class NoSuchEdge(TridomError):
    pass


class PreconditionViolated(TridomError):
    pass


class InfeasibleMix(TridomError):
    pass


class VerificationFailed(TridomError):
    exit_code = 2


class IsFamilyF(TridomError):
    exit_code = 2


class InternalAssertion(TridomError):
    """A claim the constructions depend on did not hold at runtime."""

    exit_code = 4


def ensure(condition: bool, message: str, **details: Any) -> None:
    if not condition:
        raise InternalAssertion(message, **details)
