"""Exception hierarchy shared by every module."""


class HypConjError(Exception):
    pass


class ArgumentError(HypConjError, ValueError):
    """An operation was called outside its precondition."""


class ParseError(HypConjError, ValueError):
    def __init__(self, message: str, line: int | None = None, position: int | None = None):
        self.message = message
        self.line = line
        self.position = position
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"position {position}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)


class ConfigError(HypConjError):
    """Malformed group definition or a rewriting system that does not terminate."""


class BudgetError(HypConjError):
    """A search would exceed its configured resource budget."""


class InconsistencyError(HypConjError):
    """A bound guaranteed by the theory was violated.

    Usually means the configured hyperbolicity constant is too small for the group.
    """


class CapReached(HypConjError):
    """A practical cap stopped a search short of its theoretical bound."""
