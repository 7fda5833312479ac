"""Exception hierarchy shared by services and the CLI.

Exit code mapping (see src.oriadim):
- InputError and subclasses -> 1
- CapabilityError -> 2
- StructuralError -> 3
"""

from typing import Optional


class OrientationError(Exception):
    """Base class for every error raised by this package."""


class InputError(OrientationError, ValueError):
    """Input violates a documented precondition or format."""


class GraphFormatError(InputError):
    """Graph or orientation file does not follow the edge-list grammar."""

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BridgeError(InputError):
    """Graph has a bridge, so no strongly connected orientation exists."""

    def __init__(self, bridge: tuple[int, int]) -> None:
        self.bridge = bridge
        super().__init__(f"bridge {{{bridge[0]},{bridge[1]}}}")


class PreconditionError(InputError):
    """Operation precondition failed at a specific vertex."""

    def __init__(self, message: str, vertex: Optional[int] = None) -> None:
        self.vertex = vertex
        super().__init__(message)


class CapabilityError(OrientationError):
    """Requested work exceeds a documented cap or budget."""


class StructuralError(OrientationError):
    """A structural assumption of the partition or a consistency check failed."""

    def __init__(self, message: str, vertex: Optional[int] = None) -> None:
        self.vertex = vertex
        super().__init__(message)
