"""Exception hierarchy shared across the package.

Every error a caller is expected to branch on derives from BullchromeError,
so `except BullchromeError` at a CLI or test boundary catches exactly the
failures this package raises on purpose.
"""


class BullchromeError(Exception):
    """Base class for all package-specific errors."""


class GraphFormatError(BullchromeError):
    """Malformed textual graph input (graph6 or edge list).

    `reason` is a short machine-readable tag: "empty", "header", "charset",
    "length", "padding", "range", "loop", or "duplicate".
    """

    def __init__(self, message: str, *, reason: str):
        super().__init__(message)
        self.reason = reason


class CapExceededError(BullchromeError):
    """An input is larger than the size cap of the requested operation.

    Caps exist because every expensive routine here is exact; refusing
    oversized inputs beats silently running for hours.
    """

    def __init__(self, message: str, *, size: int, cap: int):
        super().__init__(message)
        self.size = size
        self.cap = cap


class PreconditionError(BullchromeError):
    """An operation's structural precondition fails; carries a witness.

    `witness` is whatever object demonstrates the violation (a vertex
    tuple for a forbidden subgraph, a mask for a missing property), in the
    caller's vertex labels.
    """

    def __init__(self, message: str, *, witness=None):
        super().__init__(message)
        self.witness = witness


class CertificationError(BullchromeError):
    """An internal certificate check failed.

    Raised when a routine's own output fails its posted guarantee (an
    improper coloring, a budget overrun, a quotient that is not prime).
    Seeing this means a bug, not bad input.
    """

    def __init__(self, message: str, *, details=None):
        super().__init__(message)
        self.details = details or {}
