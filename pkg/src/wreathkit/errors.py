"""Exception hierarchy for wreathkit"""

from typing import Optional


class WreathkitError(Exception):
    """Base class for every error raised by wreathkit"""

    pass


class ConfigurationError(WreathkitError):
    """Invalid value in the environment or on the command line"""

    pass


class NotSmoothError(WreathkitError):
    """A number has a prime factor above the smoothness bound"""

    def __init__(self, number: int, beta: int, cofactor: int):
        self.number = number
        self.beta = beta
        self.cofactor = cofactor
        super().__init__(f"{number} is not {beta}-smooth (cofactor {cofactor} left after trial division)")


class SmoothnessError(NotSmoothError):
    """A group was declared with torsion whose order is not smooth"""

    pass


class UnsupportedError(WreathkitError):
    """The group lacks the capability an operation needs"""

    pass


class KeyOutsideCosetsError(WreathkitError):
    """A support key does not lie in any of the given coset representatives' cosets"""

    pass


class CommutingPairError(WreathkitError):
    """The submonoid gadget needs two non-commuting elements"""

    pass


class CapExceededError(WreathkitError):
    """A brute-force search was asked to go beyond its configured cap"""

    pass


class WrongGroupError(WreathkitError):
    """An oracle specialised to one group was called on another"""

    pass


class DslError(WreathkitError):
    """Syntax or semantic error in a group description"""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class WordSyntaxError(WreathkitError):
    """Malformed word token"""

    pass


class UnknownGeneratorError(WreathkitError):
    """A word mentions a generator the group does not have"""

    pass


class UsageError(WreathkitError):
    """A query was given the wrong number or kind of arguments"""

    pass
