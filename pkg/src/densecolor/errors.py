"""Exception types shared across the package."""


class GraphFormatError(ValueError):
    """Malformed edge-list or coloring text."""


class HypothesisError(ValueError):
    """An algorithm's degree/order hypothesis is not met by the input."""


class PipelineFailure(RuntimeError):
    """A construction step could not complete; carries the step name."""

    def __init__(self, step, detail=""):
        self.step = step
        self.detail = detail
        super().__init__(f"{step}: {detail}" if detail else step)


class OracleTimeout(RuntimeError):
    """The exact solver exceeded its budget."""
