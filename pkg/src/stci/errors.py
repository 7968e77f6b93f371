"""Exception hierarchy. ``exit_code`` is what the command line returns for each class."""


class StciError(Exception):
    exit_code = 2


class NotInSemigroup(StciError, ValueError):
    pass


class TargetTooLarge(StciError, ValueError):
    pass


class InvalidGenerators(StciError, ValueError):
    pass


class VarCountMismatch(StciError, ValueError):
    pass


class HomVarOccurs(StciError, ValueError):
    pass


class RuleConflict(StciError, ValueError):
    pass


class PolyParseError(StciError, ValueError):
    pass


class NotCoprime(StciError, ValueError):
    pass


class NotBadExtension(StciError, ValueError):
    pass


class DoesNotVanish(StciError, ValueError):
    pass


class BoundTooLarge(StciError, ValueError):
    pass


class TooLarge(StciError, ValueError):
    pass


class ConditionFails(StciError):
    """The F* construction's precondition does not hold for this extension."""

    exit_code = 3


class ShapeMismatch(StciError):
    exit_code = 3
