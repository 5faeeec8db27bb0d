"""Exception hierarchy.

Every error raised for bad input derives from :class:`CalogeroError`, which
is itself a ``ValueError``; the CLI maps these to exit code 2.
"""


class CalogeroError(ValueError):
    pass


class ModeError(CalogeroError):
    """Exact and float scalars were mixed in one computation."""


class ScalarParseError(CalogeroError):
    pass


class NodeError(CalogeroError):
    """Invalid node set (empty, duplicate nodes, bad generator parameters)."""


class ZeroNodeError(NodeError):
    """A node sits at the origin on a code path that divides by the nodes."""


class DomainError(CalogeroError):
    """Argument outside the domain of an operation (e.g. q = 0, x = 0)."""


class OperatorSyntaxError(CalogeroError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position
