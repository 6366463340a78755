"""Exception types shared across the package."""


class EchcapsError(Exception):
    """Base class for every error raised by this package."""


class ParseError(EchcapsError):
    """Malformed domain text; ``position`` is the character offset of the problem."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ParameterError(EchcapsError):
    """Structurally valid input with out-of-range or inconsistent parameters."""


class UnboundedProfileError(EchcapsError):
    """The operation needs a bounded profile but the input has an infinite tail."""


class BaseCaseProfileError(EchcapsError):
    """A decomposition step was requested on a profile that is already a plain triangle."""


class ExpansionLimitError(EchcapsError):
    """The weight recursion exceeded its step guard.

    ``profile`` is the sub-profile reached when the guard fired, so a hostile
    input can be inspected instead of hanging.
    """

    def __init__(self, steps: int, profile):
        super().__init__(
            f"weight expansion exceeded {steps} decomposition steps; stopped at {profile!r}"
        )
        self.steps = steps
        self.profile = profile


class ClosedFormError(EchcapsError):
    """No closed-form capacity applies to the requested input."""


class PathLimitError(EchcapsError):
    """Requested index exceeds the configured path-enumeration limit."""


class ObstructionError(EchcapsError):
    """Capacity ratio undefined: a target capacity vanishes where the source's does not."""
