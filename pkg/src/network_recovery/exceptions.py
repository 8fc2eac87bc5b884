"""
Exception hierarchy for network recovery
"""
from typing import Optional


class RecoveryError(Exception):
    """Base class for every error raised by the recovery package"""

    exit_code: int = 3


class NetworkFileError(RecoveryError):
    """Malformed or schema-invalid network file"""

    exit_code = 2

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


class LoopCapExceeded(RecoveryError):
    """The addition loop never reached one component without holes"""

    def __init__(self, iterations: int, last_betti: Optional[tuple] = None):
        self.iterations = iterations
        self.last_betti = last_betti
        super().__init__(
            f"addition loop stopped after {iterations} iterations "
            f"(last betti {last_betti})"
        )


class OverConstrainedError(RecoveryError):
    """Rejection sampler could not place a point within its proposal budget"""


class HomologyPreconditionError(RecoveryError):
    """Reduction requested on a complex that is not connected and hole-free"""


class UnknownVertexError(RecoveryError, KeyError):
    """Vertex or simplex id not present in the complex"""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown simplex"


class ConfigurationError(RecoveryError):
    """Configuration value or command-line override rejected by a model"""

    exit_code = 2
