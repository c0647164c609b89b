"""Exception hierarchy shared by the library, the CLI and the HTTP service."""


class PrimspecError(Exception):
    """Base class for all errors raised by this package."""

    kind = "error"

    def payload(self) -> dict:
        return {"kind": self.kind, "message": str(self)}


class GraphParseError(PrimspecError):
    """Syntax or content error in graph description text."""

    kind = "parse"

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        super().__init__(message)
        self.line = line
        self.col = col

    def __str__(self):
        msg = super().__str__()
        if self.line is not None:
            return f"line {self.line}, column {self.col}: {msg}"
        return msg

    def payload(self) -> dict:
        out = {"kind": self.kind, "message": Exception.__str__(self)}
        if self.line is not None:
            out["line"] = self.line
            out["col"] = self.col
        return out


class ValidationError(PrimspecError):
    """A request referenced vertices, tails or parameters that do not fit the graph."""

    kind = "validation"


class InadmissiblePairError(PrimspecError):
    """A (K, B) pair is not an admissible ideal datum for the graph."""

    kind = "inadmissible"


class InternalInconsistencyError(PrimspecError):
    """A structural guarantee failed; indicates a bug, not bad input."""

    kind = "internal"
