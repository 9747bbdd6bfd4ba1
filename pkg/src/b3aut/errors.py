"""Exception hierarchy shared by all modules."""


class B3AutError(Exception):
    """Base class for domain errors (the CLI maps these to exit code 1)."""


class ParseError(B3AutError, ValueError):
    """Malformed text input (the CLI maps this to exit code 2)."""


class NotAutomorphism(B3AutError):
    pass


class SearchExhausted(B3AutError):
    """The Nielsen reduction found no decreasing move within its search bound."""


class NoSignPattern(B3AutError):
    pass


class NonTermination(B3AutError):
    pass


class InternalInconsistency(B3AutError):
    pass


class NotInDerivedGroup(B3AutError):
    pass


class NotTorsion(B3AutError):
    pass


class AmalgDataInvalid(B3AutError):
    pass
