"""Exception hierarchy.

Everything raised on purpose by the library derives from FusionscopeError so
callers (and the CLI) can separate user-facing failures from bugs.
"""


class FusionscopeError(Exception):
    pass


class CapExceeded(FusionscopeError):
    """A group or subgroup is larger than the configured limit."""


class BadPermutation(FusionscopeError, ValueError):
    pass


class ForeignSubgroup(FusionscopeError, ValueError):
    """Subgroups from different ambient groups were mixed."""


class NotNormal(FusionscopeError, ValueError):
    pass


class NotAbelian(FusionscopeError, ValueError):
    pass


class ExprError(FusionscopeError, ValueError):
    """Base class for group-expression parse failures."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ExprSyntaxError(ExprError):
    pass


class ArityError(ExprError):
    pass


class DomainError(ExprError):
    pass


class CriteriaDisagree(FusionscopeError, AssertionError):
    """Equivalent characterisations gave different answers; signals a bug."""


class NotAFusionMorphism(FusionscopeError, ValueError):
    pass


class SearchExhausted(FusionscopeError, RuntimeError):
    pass
